#include "lietrans/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "lietrans/catalog.hpp"
#include "lietrans/derivations.hpp"
#include "lietrans/errors.hpp"
#include "lietrans/transitivity.hpp"

namespace lietrans::verify {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "hypothesis-not-satisfied";
    case Status::Error: return "error";
  }
  return "?";
}

std::size_t SuiteReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.status == s; }));
}

std::size_t SuiteReport::count(int criterion, Status s) const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [&](const CheckResult& r) {
    return r.criterion == criterion && r.status == s;
  }));
}

LieAlgebra random_solvable(std::mt19937_64& rng, std::size_t size, std::size_t generators, std::string name) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<Mat> gens;
  for (std::size_t g = 0; g < generators; ++g) {
    Mat m(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i; j < size; ++j) m(i, j) = entry(rng);
    gens.push_back(std::move(m));
  }
  return linear_lie_algebra(gens, std::move(name));
}

std::vector<LieAlgebra> random_centerless(std::uint64_t seed, std::size_t count, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  std::vector<LieAlgebra> out;
  for (std::size_t draw = 0; out.size() < count && draw < 1000 * count; ++draw) {
    const std::size_t size = 2 + draw % 2;
    LieAlgebra g = random_solvable(rng, size, 2, "centerless#" + std::to_string(out.size()));
    if (g.dim() < 2 || g.dim() > max_dim || !center(g).space().is_zero()) continue;
    if (std::any_of(out.begin(), out.end(), [&](const LieAlgebra& h) { return h == g; })) continue;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<LieAlgebra> random_mixed(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<LieAlgebra> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t size = 2 + i % 2;
    const std::size_t gens = 1 + (i / 2) % 3;
    LieAlgebra s = random_solvable(rng, size, gens, "solvable#" + std::to_string(i));
    switch (i % 4) {
      case 1: s = direct_sum(s, catalog::sl2(), "solvable#" + std::to_string(i) + "+sl2").algebra; break;
      case 3: s = direct_sum(catalog::so3(), s, "so3+solvable#" + std::to_string(i)).algebra; break;
      default: break;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Subspace> probe_subalgebras(const LieAlgebra& g, const std::vector<Subspace>& tagged) {
  const std::size_t n = g.dim();
  std::vector<Subspace> out;
  auto add = [&](const Subspace& s) {
    if (s.is_zero() || !is_bracket_closed(g, s)) return;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  for (const Subspace& s : tagged) add(s);
  for (std::size_t i = 0; i < n; ++i) add(generated_subalgebra(g, {unit_vector(n, i)}).space());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      add(generated_subalgebra(g, {unit_vector(n, i), unit_vector(n, j)}).space());
  for (const Subspace& s : derived_series(g)) add(s);
  for (const Subspace& s : lower_central_series(g)) add(s);
  add(center(g).space());
  add(radical(g).space());
  return out;
}

std::vector<std::string> suite_names() { return {"perfect", "complete", "radical", "forms", "selfnorm"}; }

namespace {

using Results = std::vector<CheckResult>;

struct Task {
  int criterion;
  std::string suite;
  std::string group;
  std::string id;
  std::function<Results()> run;
};

CheckResult result(const Task& t, Status s, std::string detail) {
  return CheckResult{t.criterion, t.suite, t.group, t.id, s, std::move(detail)};
}

Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

Status from_verdict(Verdict v) {
  switch (v) {
    case Verdict::Pass: return Status::Pass;
    case Verdict::Fail: return Status::Fail;
    case Verdict::HypothesisNotSatisfied: return Status::Skipped;
  }
  return Status::Error;
}

Subspace leading(std::size_t ambient, std::size_t count) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < count; ++i) vs.push_back(unit_vector(ambient, i));
  return Subspace::span(ambient, vs);
}

std::string yn(bool b) { return b ? "true" : "false"; }

// ---- perfect: transitivity of perfect subideals and its converse ----

void perfect_tasks(std::vector<Task>& tasks) {
  const std::vector<std::string> perfect = {"sl2", "so3", "sl2_rad2", "sl2_sum_so3"};
  const std::vector<std::string> partners = {"abelian(1)", "abelian(2)", "aff1",    "heisenberg3",
                                             "sl2",        "so3",        "sl2_rad2"};
  const std::vector<std::string> extensions = {"", "abelian(1)", "aff1"};

  for (const std::string& hn : perfect)
    for (const std::string& pn : partners)
      for (const std::string& xn : extensions) {
        const std::string id = "h=" + hn + " k=" + hn + "+" + pn + " g=H(k)" + (xn.empty() ? "" : "+" + xn);
        tasks.push_back({1, "perfect", hn, id, [hn, pn, xn]() {
                           const LieAlgebra h = catalog::get(hn).algebra;
                           const LieAlgebra k = direct_sum(h, catalog::get(pn).algebra).algebra;
                           LieAlgebra g = holomorph(k).algebra;
                           if (!xn.empty()) g = direct_sum(g, catalog::get(xn).algebra).algebra;
                           const Subalgebra hs(g, leading(g.dim(), h.dim()));
                           const IdealChain chain({hs, Subalgebra(g, leading(g.dim(), k.dim())), Subalgebra::full(g)});
                           const PerfectTransitivityReport rep = check_perfect_transitivity(g, hs);
                           Results out;
                           out.push_back({1, "", "", "", pass_if(rep.verdict() == Verdict::Pass && chain.verify()),
                                          "dim g=" + std::to_string(g.dim()) + " chain length " +
                                              std::to_string(rep.chain.length()) + " ideal=" + yn(rep.is_ideal)});
                           if (rep.is_ideal) {
                             const DerivationAlgebra d = derivation_algebra(g);
                             const bool ch = is_characteristic(g, hs, d);
                             out.push_back({3, "", "", "", pass_if(ch),
                                            "dim D(g)=" + std::to_string(d.dim()) + " characteristic=" + yn(ch)});
                           } else {
                             out.push_back({3, "", "", "", Status::Fail, "h is not an ideal of g"});
                           }
                           return out;
                         }});
      }

  tasks.push_back({3, "perfect", "aff1", "k=aff1+abelian(1) h=aff1+0", []() {
                     const LieAlgebra aff = catalog::aff1();
                     const LieAlgebra k = direct_sum(aff, catalog::abelian(1)).algebra;
                     const Subalgebra h(k, leading(3, 2));
                     // f(X, Y) = (0, pi(X)) with pi: aff1 -> aff1/[aff1, aff1] picking the x-coordinate.
                     Mat f(3, 3);
                     f(2, 0) = 1;
                     const bool derivation = is_derivation(k, f);
                     const bool moves = !h.space().contains(f.apply(unit_vector(3, 0)));
                     const bool ch = is_characteristic(k, h);
                     return Results{{3, "", "", "", pass_if(derivation && moves && !ch),
                                     "f derivation=" + yn(derivation) + " f(h) escapes=" + yn(moves) +
                                         " characteristic=" + yn(ch)}};
                   }});

  const std::vector<std::string> nonperfect = {"abelian(1)", "abelian(2)",  "abelian(3)",         "abelian(4)",
                                               "heisenberg3", "aff1",       "upper_triangular(3)"};
  for (const std::string& hn : nonperfect)
    tasks.push_back({2, "perfect", hn, "counterexample h=" + hn, [hn]() {
                       const CounterexampleCertificate c = counterexample_extension(catalog::get(hn).algebra);
                       const bool ok = c.verify() && c.chain.verify();
                       return Results{{2, "", "", "", pass_if(ok),
                                       "dim H(k)=" + std::to_string(c.ambient.dim()) + " X_o=e" +
                                           std::to_string(c.x_index) + " escaping=" + to_string(c.escaping_value)}};
                     }});
  for (const std::string& hn : {std::string("sl2"), std::string("so3")})
    tasks.push_back({2, "perfect", hn, "counterexample rejected for perfect h=" + hn, [hn]() {
                       try {
                         (void)counterexample_extension(catalog::get(hn).algebra);
                       } catch (const PreconditionError& e) {
                         return Results{{2, "", "", "", Status::Pass, e.what()}};
                       }
                       return Results{{2, "", "", "", Status::Fail, "no precondition error"}};
                     }});
}

// ---- complete: derivation towers and complete subideals ----

void complete_tasks(std::vector<Task>& tasks, const Options& opts) {
  std::vector<LieAlgebra> centerless;
  for (const char* n : {"sl2", "aff1", "so3", "sl2_sum_aff1", "sl2_rad2"}) centerless.push_back(catalog::get(n).algebra);
  for (LieAlgebra& g : random_centerless(opts.seed, 6, 6)) centerless.push_back(std::move(g));

  for (const LieAlgebra& g : centerless)
    tasks.push_back({4, "complete", g.name(), "tower " + g.name(), [g]() {
                       const DerivedTowerCheck chk = theorem_derived_check(g);
                       const TowerReport tower = derivation_tower(g);
                       const bool ok = chk.consistent() && tower.stabilized_at.has_value();
                       return Results{{4, "", "", "", pass_if(ok),
                                       "D(g) complete=" + yn(chk.d_complete) + " g ideal of D^2(g)=" +
                                           yn(chk.ideal_in_d2) + " dims " + std::to_string(chk.dim_d) + "," +
                                           std::to_string(chk.dim_d2) + " stabilized_at=" +
                                           (tower.stabilized_at ? std::to_string(*tower.stabilized_at) : "none")}};
                     }});

  std::vector<LieAlgebra> lemma_corpus;
  for (const std::string& n : catalog::list()) lemma_corpus.push_back(catalog::get(n).algebra);
  for (const LieAlgebra& g : centerless)
    if (std::none_of(lemma_corpus.begin(), lemma_corpus.end(), [&](const LieAlgebra& h) { return h == g; }))
      lemma_corpus.push_back(g);
  for (LieAlgebra& g : random_mixed(opts.seed, 8)) lemma_corpus.push_back(std::move(g));
  for (const LieAlgebra& g : lemma_corpus)
    tasks.push_back({5, "complete", g.name(), "[f, ad_X] = ad_f(X) on " + g.name(), [g]() {
                       const DerivationAlgebra d = derivation_algebra(g);
                       const bool ok = commutator_with_inner_identity(d);
                       return Results{{5, "", "", "", pass_if(ok), "dim D(g)=" + std::to_string(d.dim())}};
                     }});

  for (const char* hn : {"aff1", "sl2", "so3"})
    for (const char* pn : {"aff1", "sl2", "so3", "sl2_rad2"}) {
      const std::string h_name = hn, p_name = pn;
      tasks.push_back({6, "complete", h_name, "h=" + h_name + " k=" + h_name + "+" + p_name + " g=H(k)",
                       [h_name, p_name]() {
                         const LieAlgebra h = catalog::get(h_name).algebra;
                         const LieAlgebra k = direct_sum(h, catalog::get(p_name).algebra).algebra;
                         const LieAlgebra g = holomorph(k).algebra;
                         const CompleteSubidealReport rep = check_complete_subideal(
                             g, Subalgebra(g, leading(g.dim(), h.dim())), Subalgebra(g, leading(g.dim(), k.dim())));
                         return Results{{6, "", "", "", from_verdict(rep.verdict()),
                                         "ideal=" + yn(rep.is_ideal) + " dim c_k(h)=" +
                                             std::to_string(rep.centralizer.dim()) + " sum=" + yn(rep.sum_is_k) +
                                             " meet0=" + yn(rep.intersection_zero) +
                                             " commute=" + yn(rep.cross_bracket_zero)}};
                       }});
    }
}

// ---- radical: r_h = r_g meet h and the three-way Levi criterion ----

void radical_tasks(std::vector<Task>& tasks, const Options& opts) {
  struct Instance {
    LieAlgebra g;
    std::vector<Subspace> tagged;
    std::string group;
  };
  std::vector<Instance> instances;
  for (const std::string& n : catalog::list()) {
    catalog::Entry e = catalog::get(n);
    std::vector<Subspace> tagged;
    for (const auto& [_, s] : e.subspaces) tagged.push_back(s);
    instances.push_back({e.algebra, std::move(tagged), "catalog"});
  }
  for (LieAlgebra& g : random_mixed(opts.seed, opts.random)) instances.push_back({std::move(g), {}, "random"});

  for (const Instance& inst : instances)
    tasks.push_back({7, "radical", inst.group, inst.g.name(), [inst]() {
                       Results out;
                       for (const Subspace& s : probe_subalgebras(inst.g, inst.tagged)) {
                         const Subalgebra h(inst.g, s);
                         if (!subideal_chain(inst.g, h).is_subideal()) continue;
                         const RadicalIntersectionReport r = check_radical_intersection(inst.g, h);
                         const LeviCriterionReport l = levi_criterion(inst.g, h);
                         const std::string sub = "h=" + s.str();
                         out.push_back({7, "", "", sub, pass_if(r.equal()),
                                        "dim r_h=" + std::to_string(r.radical_h.dim()) +
                                            " dim r_g meet h=" + std::to_string(r.radical_g_cap_h.dim())});
                         out.push_back({8, "", "", sub, pass_if(l.agree()),
                                        "ideal=" + yn(l.ideal) + " r_h ideal=" + yn(l.radical_ideal) +
                                            " [r_h,g] in h=" + yn(l.radical_bracket)});
                       }
                       return out;
                     }});
}

// ---- forms: the skew-form criterion and Cartan involutions ----

void forms_tasks(std::vector<Task>& tasks) {
  struct FormCase {
    std::string entry;
    std::string form;
  };
  const std::vector<FormCase> cases = {{"so3", "neg_killing"},
                                       {"so3_sum_so3", "neg_killing"},
                                       {"sl2", "compact_embedding"},
                                       {"sl2", "killing"}};
  for (const FormCase& fc : cases)
    tasks.push_back({9, "forms", fc.entry + "/" + fc.form, fc.entry + " B=" + fc.form, [fc]() {
                       const catalog::Entry e = catalog::get(fc.entry);
                       const SymForm& b = e.form(fc.form);
                       std::vector<Subspace> tagged;
                       for (const auto& [_, s] : e.subspaces) tagged.push_back(s);
                       std::vector<Subspace> subs = probe_subalgebras(e.algebra, tagged);
                       Results out;
                       for (const Subspace& hs : subs)
                         for (const Subspace& ks : subs) {
                           if (!ks.contains(hs)) continue;
                           const SkewFormReport r =
                               check_skew_form_criterion(b, Subalgebra(e.algebra, hs), Subalgebra(e.algebra, ks));
                           out.push_back({9, "", "", "h=" + hs.str() + " k=" + ks.str(), from_verdict(r.verdict()),
                                          "inertia on h " + r.hypotheses.on_h.str() + ", on m " +
                                              r.hypotheses.on_complement.str() + " skew=" + yn(r.hypotheses.skew) +
                                              " subideal=" + yn(r.subideal) + " ideal=" + yn(r.ideal)});
                         }
                       return out;
                     }});

  tasks.push_back({10, "forms", "sl2", "Cartan decomposition of sl2", []() {
                     const catalog::Entry e = catalog::get("sl2");
                     const CartanDecomposition cd = cartan_eigenspaces(e.algebra, e.map("theta"));
                     const bool u_ok = cd.u.space() == e.subspace("u");
                     const bool p_ok = cd.p == e.subspace("p");
                     const bool inertia_ok = cd.killing_on_u == Inertia{0, 1, 0} && cd.killing_on_p == Inertia{2, 0, 0};
                     return Results{{10, "", "", "", pass_if(u_ok && p_ok && inertia_ok),
                                     "u=" + cd.u.space().str() + " p=" + cd.p.str() + " K|u " +
                                         cd.killing_on_u.str() + " K|p " + cd.killing_on_p.str()}};
                   }});
  for (const char* entry : {"sl2", "sl2_sum_so3"})
    tasks.push_back({10, "forms", entry, std::string("Cartan criterion on ") + entry, [name = std::string(entry)]() {
                       const catalog::Entry e = catalog::get(name);
                       const LieAlgebra& g = e.algebra;
                       const CartanDecomposition cd = cartan_eigenspaces(g, e.map("theta"));
                       Results out;
                       for (const Subspace& hs : probe_subalgebras(g, {cd.u.space()})) {
                         if (!hs.contains(cd.u.space()) && !hs.contains(cd.p)) continue;
                         for (const Subspace& ks : probe_subalgebras(g, {cd.u.space()})) {
                           if (!ks.contains(hs)) continue;
                           const CartanCriterionReport r =
                               check_cartan_criterion(g, e.map("theta"), Subalgebra(g, hs), Subalgebra(g, ks));
                           out.push_back({10, "", "", "h=" + hs.str() + " k=" + ks.str(), from_verdict(r.verdict()),
                                          "contains u=" + yn(r.contains_u) + " contains p=" + yn(r.contains_p) +
                                              " subideal=" + yn(r.subideal) + " ideal=" + yn(r.ideal)});
                         }
                       }
                       return out;
                     }});
  tasks.push_back({10, "forms", "sl2", "identity is not a Cartan involution of sl2", []() {
                     const LieAlgebra g = catalog::sl2();
                     try {
                       (void)cartan_eigenspaces(g, LinMap(g, g, Mat::identity(3)));
                     } catch (const PreconditionError& e) {
                       return Results{{10, "", "", "", Status::Pass, e.what()}};
                     }
                     return Results{{10, "", "", "", Status::Fail, "identity accepted"}};
                   }});
}

// ---- selfnorm: normalizers under each hypothesis of the self-normalizing theorem ----

void selfnorm_tasks(std::vector<Task>& tasks, const Options& opts) {
  struct Case {
    std::string entry;
    std::vector<SelfNormalizingHypothesis> hyps;
  };
  auto form_of = [](const std::string& entry, const std::string& tag) { return catalog::get(entry).form(tag); };
  auto map_of = [](const std::string& entry, const std::string& tag) { return catalog::get(entry).map(tag); };

  std::vector<Case> cases;
  for (const std::string& n : catalog::list())
    cases.push_back({n, {hypothesis::Perfect{}, hypothesis::RadicalCentral{}}});
  for (Case& c : cases) {
    if (c.entry == "sl2") {
      c.hyps.push_back(hypothesis::SkewForm{form_of("sl2", "killing")});
      c.hyps.push_back(hypothesis::CompactlyEmbedded{form_of("sl2", "compact_embedding")});
      c.hyps.push_back(hypothesis::CartanEigenspace{map_of("sl2", "theta")});
    } else if (c.entry == "so3" || c.entry == "so3_sum_so3") {
      c.hyps.push_back(hypothesis::CompactType{form_of(c.entry, "neg_killing")});
      c.hyps.push_back(hypothesis::CompactlyEmbedded{form_of(c.entry, "neg_killing")});
      c.hyps.push_back(hypothesis::SkewForm{form_of(c.entry, "neg_killing")});
    } else if (c.entry == "sl2_sum_so3") {
      c.hyps.push_back(hypothesis::CartanEigenspace{map_of("sl2_sum_so3", "theta")});
    }
  }

  for (const Case& c : cases)
    tasks.push_back({11, "selfnorm", c.entry, c.entry, [c]() {
                       const catalog::Entry e = catalog::get(c.entry);
                       std::vector<Subspace> tagged;
                       for (const auto& [_, s] : e.subspaces) tagged.push_back(s);
                       Results out;
                       for (const Subspace& s : probe_subalgebras(e.algebra, tagged))
                         for (const SelfNormalizingHypothesis& hyp : c.hyps) {
                           const SelfNormalizingReport r =
                               check_self_normalizing_theorem(e.algebra, Subalgebra(e.algebra, s), hyp);
                           out.push_back({11, "", "(" + r.tag + ")", "h=" + s.str(), from_verdict(r.verdict()),
                                          r.hypothesis_detail + (r.normalizer ? " dim N(h)=" +
                                                                                     std::to_string(r.normalizer->dim()) +
                                                                                     " tower=" +
                                                                                     std::to_string(r.tower_length)
                                                                               : "")});
                         }
                       return out;
                     }});

  for (LieAlgebra& g : random_mixed(opts.seed + 1, 12))
    tasks.push_back({11, "selfnorm", "random", g.name(), [g]() {
                       Results out;
                       for (const Subspace& s : probe_subalgebras(g))
                         for (const SelfNormalizingHypothesis& hyp :
                              {SelfNormalizingHypothesis(hypothesis::Perfect{}),
                               SelfNormalizingHypothesis(hypothesis::RadicalCentral{})}) {
                           const SelfNormalizingReport r = check_self_normalizing_theorem(g, Subalgebra(g, s), hyp);
                           out.push_back({11, "", "(" + r.tag + ")", "h=" + s.str(), from_verdict(r.verdict()),
                                          r.hypothesis_detail});
                         }
                       return out;
                     }});
}

SuiteReport execute(std::vector<Task> tasks) {
  std::vector<Results> slots(tasks.size());
  const auto nt = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (long si = 0; si < nt; ++si) {
    const auto i = static_cast<std::size_t>(si);
    const Task& t = tasks[i];
    try {
      Results rs = t.run();
      for (CheckResult& r : rs) {
        r.suite = t.suite;
        if (r.group.empty()) r.group = t.group;
        r.id = r.id.empty() ? t.id : t.id + " " + r.id;
      }
      slots[i] = std::move(rs);
    } catch (const std::exception& e) {
      slots[i] = {result(t, Status::Error, e.what())};
    }
  }
  SuiteReport rep;
  for (Results& rs : slots)
    for (CheckResult& r : rs) rep.results.push_back(std::move(r));
  return rep;
}

}  // namespace

SuiteReport run_suite(std::string_view suite, const Options& opts) {
  std::vector<Task> tasks;
  const bool all = suite == "all";
  const std::vector<std::string> names = suite_names();
  if (!all && std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  if (all || suite == "perfect") perfect_tasks(tasks);
  if (all || suite == "complete") complete_tasks(tasks, opts);
  if (all || suite == "radical") radical_tasks(tasks, opts);
  if (all || suite == "forms") forms_tasks(tasks);
  if (all || suite == "selfnorm") selfnorm_tasks(tasks, opts);
  return execute(std::move(tasks));
}

}  // namespace lietrans::verify
