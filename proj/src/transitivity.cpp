#include "lietrans/transitivity.hpp"

#include <utility>

#include "lietrans/errors.hpp"

namespace lietrans {

namespace {

Subspace span_of_units(std::size_t ambient, std::size_t count) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < count; ++i) vs.push_back(unit_vector(ambient, i));
  return Subspace::span(ambient, vs);
}

void require_same_parent(const Subalgebra& a, const Subalgebra& b, const char* where) {
  if (!(a.parent() == b.parent())) throw DimensionError(std::string(where) + ": subalgebras of different algebras");
}

void require_form_on(const SymForm& b, const LieAlgebra& g, const char* where) {
  if (!(b.ambient() == g)) throw DimensionError(std::string(where) + ": form belongs to another algebra");
}

}  // namespace

IdealChain::IdealChain(std::vector<Subalgebra> links) : links_(std::move(links)) {
  if (links_.empty()) throw PreconditionError("IdealChain: empty chain");
  for (std::size_t i = 1; i < links_.size(); ++i) require_same_parent(links_[i - 1], links_[i], "IdealChain");
  if (!verify()) throw PreconditionError("IdealChain: some link is not an ideal of the next");
}

bool IdealChain::verify() const {
  const LieAlgebra& g = links_.front().parent();
  for (std::size_t i = 0; i + 1 < links_.size(); ++i) {
    const Subspace& inner = links_[i].space();
    const Subspace& outer = links_[i + 1].space();
    if (!outer.contains(inner) || !normalizes(g, outer, inner)) return false;
  }
  return true;
}

Subspace ideal_closure_in(const LieAlgebra& g, const Subspace& within, const Subspace& h) {
  if (!within.contains(h)) throw PreconditionError("ideal_closure_in: h is not inside the enclosing subalgebra");
  Subspace s = h;
  for (;;) {
    Subspace next = sum(s, bracket_spaces(g, within, s));
    if (next == s) return s;
    s = std::move(next);
  }
}

Subalgebra ideal_closure(const LieAlgebra& g, const Subalgebra& h) {
  return Subalgebra(g, ideal_closure_in(g, Subspace::full(g.dim()), h.space()));
}

SubidealResult subideal_chain(const Subalgebra& k, const Subalgebra& h) {
  require_same_parent(k, h, "subideal_chain");
  if (!k.space().contains(h.space())) throw PreconditionError("subideal_chain: h is not contained in k");
  const LieAlgebra& g = k.parent();

  SubidealResult out;
  out.series.push_back(k.space());
  for (std::size_t step = 0; step <= g.dim(); ++step) {
    Subspace next = ideal_closure_in(g, out.series.back(), h.space());
    if (next == out.series.back()) break;
    out.series.push_back(std::move(next));
  }
  if (!(out.floor() == h.space())) return out;

  std::vector<Subalgebra> links;
  for (auto it = out.series.rbegin(); it != out.series.rend(); ++it) links.emplace_back(g, *it);
  IdealChain chain(std::move(links));
  if (!chain.verify()) throw InvariantViolation("subideal_chain: closure series failed re-verification");
  out.chain = std::move(chain);
  return out;
}

SubidealResult subideal_chain(const LieAlgebra& g, const Subalgebra& h) {
  return subideal_chain(Subalgebra::full(g), h);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::HypothesisNotSatisfied: return "hypothesis-not-satisfied";
  }
  return "?";
}

PerfectTransitivityReport check_perfect_transitivity(const LieAlgebra& g, const Subalgebra& h) {
  if (!is_perfect(h)) throw PreconditionError("check_perfect_transitivity: h is not perfect");
  SubidealResult r = subideal_chain(g, h);
  if (!r.chain) throw PreconditionError("check_perfect_transitivity: h is not a subideal of g");
  const bool ideal = is_ideal(g, h);
  return PerfectTransitivityReport{std::move(*r.chain), ideal};
}

bool CounterexampleCertificate::verify() const {
  if (!is_derivation(k, derivation_f)) return false;
  if (!chain.verify() || chain.length() != 3) return false;
  if (!(chain.back().parent() == ambient) || !chain.back().space().is_full()) return false;
  if (chain.front().dim() != h.dim()) return false;
  if (!chain.front().space().contains(witness_left)) return false;
  if (ambient.bracket(witness_left, witness_right) != escaping_value) return false;
  return !chain.front().space().contains(escaping_value);
}

CounterexampleCertificate counterexample_extension(const LieAlgebra& h) {
  if (is_perfect(h)) throw PreconditionError("h is perfect");
  const std::size_t n = h.dim();
  const Quotient q = quotient(h, derived_subalgebra(h).space());
  const std::size_t m = q.algebra.dim();
  const std::string base = h.name().empty() ? "h" : h.name();
  const DirectSum ds = direct_sum(h, q.algebra, base + "+" + base + "/[" + base + "," + base + "]");
  const LieAlgebra& k = ds.algebra;

  // f(X, Y) = (0, pi(X))
  Mat f(n + m, n + m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) f(n + r, c) = q.projection.matrix()(r, c);
  if (!is_derivation(k, f)) throw InvariantViolation("counterexample_extension: f is not a derivation of k");

  const Holomorph hol = holomorph(k);
  const LieAlgebra& amb = hol.algebra;
  const std::size_t total = amb.dim();

  std::vector<Subalgebra> links{Subalgebra(amb, span_of_units(total, n)), Subalgebra(amb, span_of_units(total, n + m)),
                                Subalgebra::full(amb)};
  IdealChain chain(std::move(links));

  std::size_t x = n;
  for (std::size_t c = 0; c < n && x == n; ++c)
    if (!is_zero(q.projection.matrix().column(c))) x = c;
  if (x == n) throw InvariantViolation("counterexample_extension: projection to h/[h,h] vanishes");

  Vec left = unit_vector(total, x);
  Vec right = zeros(total);
  const Vec fc = hol.derivations.coordinates(f);
  for (std::size_t a = 0; a < fc.size(); ++a) right[n + m + a] = fc[a];
  Vec escaping = amb.bracket(left, right);

  CounterexampleCertificate cert{h,     k, std::move(f), amb, std::move(chain), x, std::move(left), std::move(right),
                                 std::move(escaping)};
  if (!cert.verify()) throw InvariantViolation("counterexample_extension: certificate failed re-verification");
  return cert;
}

CompleteSubidealReport check_complete_subideal(const LieAlgebra& g, const Subalgebra& h, const Subalgebra& k) {
  require_same_parent(h, k, "check_complete_subideal");
  if (!(h.parent() == g)) throw DimensionError("check_complete_subideal: subalgebras of another algebra");
  if (!k.space().contains(h.space()) || !normalizes(g, k.space(), h.space()))
    throw PreconditionError("check_complete_subideal: h is not an ideal of k");
  if (!is_ideal(g, k)) throw PreconditionError("check_complete_subideal: k is not an ideal of g");
  if (!center(k.as_algebra()).space().is_zero())
    throw PreconditionError("check_complete_subideal: k has nontrivial center");
  if (!is_complete(h.as_algebra())) throw PreconditionError("check_complete_subideal: h is not complete");

  CompleteSubidealReport out;
  out.is_ideal = is_ideal(g, h);
  out.centralizer = intersect(centralizer(g, h).space(), k.space());
  out.sum_is_k = sum(h.space(), out.centralizer) == k.space();
  out.intersection_zero = intersect(h.space(), out.centralizer).is_zero();
  out.cross_bracket_zero = bracket_spaces(g, h.space(), out.centralizer).is_zero();
  return out;
}

RadicalIntersectionReport check_radical_intersection(const LieAlgebra& g, const Subalgebra& h) {
  if (!subideal_chain(g, h).is_subideal())
    throw PreconditionError("check_radical_intersection: h is not a subideal of g");
  return RadicalIntersectionReport{radical(h), intersect(radical(g).space(), h.space())};
}

LeviCriterionReport levi_criterion(const LieAlgebra& g, const Subalgebra& h) {
  if (!subideal_chain(g, h).is_subideal()) throw PreconditionError("levi_criterion: h is not a subideal of g");
  const Subspace r = radical(h);
  LeviCriterionReport out;
  out.ideal = is_ideal(g, h);
  out.radical_ideal = is_ideal(g, r);
  out.radical_bracket = h.space().contains(bracket_spaces(g, r, Subspace::full(g.dim())));
  return out;
}

bool ad_skew_on(const SymForm& b, const Subspace& s) {
  const Mat& bm = b.matrix();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Mat a = b.ambient().ad(s.basis().row(i));
    if (!(a.transpose() * bm + bm * a).is_zero()) return false;
  }
  return true;
}

SkewFormHypotheses skew_form_hypotheses(const SymForm& b, const Subalgebra& h) {
  require_form_on(b, h.parent(), "skew_form_hypotheses");
  SkewFormHypotheses out;
  out.on_h = inertia(b.matrix(), h.space());
  out.on_complement = inertia(b.matrix(), orthogonal_complement(b.matrix(), h.space()));
  out.skew = ad_skew_on(b, h.space());
  return out;
}

SkewFormReport check_skew_form_criterion(const SymForm& b, const Subalgebra& h, const Subalgebra& k) {
  require_same_parent(h, k, "check_skew_form_criterion");
  if (!k.space().contains(h.space())) throw PreconditionError("check_skew_form_criterion: h is not contained in k");
  SkewFormReport out;
  out.hypotheses = skew_form_hypotheses(b, h);
  out.subideal = subideal_chain(k, h).is_subideal();
  out.ideal = normalizes(h.parent(), k.space(), h.space());
  return out;
}

CartanDecomposition cartan_eigenspaces(const LieAlgebra& g, const LinMap& theta) {
  const std::size_t n = g.dim();
  if (!(theta.source() == g) || !(theta.target() == g))
    throw DimensionError("cartan_eigenspaces: theta is not an endomorphism of g");
  const Mat& t = theta.matrix();
  if (t * t != Mat::identity(n)) throw PreconditionError("cartan_eigenspaces: theta is not an involution");
  if (!is_homomorphism(theta)) throw PreconditionError("cartan_eigenspaces: theta is not an automorphism");
  if (!is_semisimple(g)) throw PreconditionError("cartan_eigenspaces: g is not semisimple");

  const Mat kf = killing_form(g).matrix();
  const Mat inner = Rat(-1) * (kf * t);
  if (!inner.is_symmetric() || !inertia(inner).positive_definite())
    throw PreconditionError("cartan_eigenspaces: -K(X, theta Y) is not positive definite, not a Cartan involution");

  const Subspace u = nullspace(t - Mat::identity(n));
  const Subspace p = nullspace(t + Mat::identity(n));
  if (u.dim() + p.dim() != n || !is_bracket_closed(g, u))
    throw InvariantViolation("cartan_eigenspaces: eigenspaces do not split g into a subalgebra and a complement");
  if (!p.contains(bracket_spaces(g, u, p)) || !u.contains(bracket_spaces(g, p, p)))
    throw InvariantViolation("cartan_eigenspaces: bracket relations [u,p] in p, [p,p] in u fail");
  if (!(u.basis() * kf * p.basis().transpose()).is_zero())
    throw InvariantViolation("cartan_eigenspaces: u and p are not Killing-orthogonal");
  const Inertia on_u = inertia(kf, u), on_p = inertia(kf, p);
  if (!on_u.negative_definite() || !on_p.positive_definite())
    throw InvariantViolation("cartan_eigenspaces: Killing form has the wrong sign on u or p");

  return CartanDecomposition{Subalgebra(g, u), p, SymForm(g, inner), on_u, on_p};
}

CartanCriterionReport check_cartan_criterion(const LieAlgebra& g, const LinMap& theta, const Subalgebra& h,
                                             const Subalgebra& k) {
  require_same_parent(h, k, "check_cartan_criterion");
  const CartanDecomposition cd = cartan_eigenspaces(g, theta);
  CartanCriterionReport out;
  out.contains_u = h.space().contains(cd.u.space());
  out.contains_p = h.space().contains(cd.p);
  if (!out.contains_u && !out.contains_p) throw PreconditionError("check_cartan_criterion: h contains neither u nor p");
  if (!k.space().contains(h.space())) throw PreconditionError("check_cartan_criterion: h is not contained in k");
  out.subideal = subideal_chain(k, h).is_subideal();
  out.ideal = normalizes(g, k.space(), h.space());
  return out;
}

std::vector<Subalgebra> normalizer_tower(const LieAlgebra& g, const Subalgebra& h) {
  std::vector<Subalgebra> tower{h};
  for (;;) {
    Subalgebra next = normalizer(g, tower.back());
    if (next == tower.back()) return tower;
    tower.push_back(std::move(next));
  }
}

bool is_self_normalizing(const LieAlgebra& g, const Subalgebra& h) { return normalizer(g, h) == h; }

std::string hypothesis_tag(const SelfNormalizingHypothesis& h) {
  static const char* const tags[] = {"i", "ii", "iii", "iv", "v", "vi"};
  return tags[h.index()];
}

namespace {

struct HypothesisOutcome {
  bool holds;
  std::string detail;
};

struct HypothesisChecker {
  const LieAlgebra& g;
  const Subalgebra& h;

  HypothesisOutcome operator()(const hypothesis::Perfect&) const {
    const bool ok = is_perfect(h);
    return {ok, ok ? "h is perfect" : "h is not perfect"};
  }
  HypothesisOutcome operator()(const hypothesis::RadicalCentral&) const {
    const bool ok = center(g).space().contains(radical(h));
    return {ok, ok ? "radical of h lies in the center of g" : "radical of h is not central in g"};
  }
  HypothesisOutcome operator()(const hypothesis::SkewForm& s) const {
    require_form_on(s.form, g, "check_self_normalizing_theorem");
    const SkewFormHypotheses hy = skew_form_hypotheses(s.form, h);
    return {hy.hold(), "inertia on h " + hy.on_h.str() + ", on complement " + hy.on_complement.str() +
                           (hy.skew ? ", ad_h skew" : ", ad_h not skew")};
  }
  HypothesisOutcome operator()(const hypothesis::CompactType& s) const {
    require_form_on(s.form, g, "check_self_normalizing_theorem");
    if (!inertia(s.form.matrix()).positive_definite()) return {false, "form is not positive definite"};
    const bool ok = ad_skew_on(s.form, Subspace::full(g.dim()));
    return {ok, ok ? "positive definite form with every ad_X skew" : "some ad_X is not skew"};
  }
  HypothesisOutcome operator()(const hypothesis::CompactlyEmbedded& s) const {
    require_form_on(s.form, g, "check_self_normalizing_theorem");
    if (!inertia(s.form.matrix()).positive_definite()) return {false, "form is not positive definite"};
    const bool ok = ad_skew_on(s.form, h.space());
    return {ok, ok ? "positive definite form with ad_h skew" : "ad_h is not skew"};
  }
  HypothesisOutcome operator()(const hypothesis::CartanEigenspace& s) const {
    std::optional<CartanDecomposition> cd;
    try {
      cd = cartan_eigenspaces(g, s.theta);
    } catch (const PreconditionError& e) {
      return {false, e.what()};
    }
    if (h.space().contains(cd->u.space())) return {true, "h contains u"};
    if (h.space().contains(cd->p)) return {true, "h contains p"};
    return {false, "h contains neither u nor p"};
  }
};

}  // namespace

SelfNormalizingReport check_self_normalizing_theorem(const LieAlgebra& g, const Subalgebra& h,
                                                     const SelfNormalizingHypothesis& hyp) {
  if (!(h.parent() == g)) throw DimensionError("check_self_normalizing_theorem: h belongs to another algebra");
  SelfNormalizingReport out;
  out.tag = hypothesis_tag(hyp);
  const HypothesisOutcome o = std::visit(HypothesisChecker{g, h}, hyp);
  out.hypothesis_holds = o.holds;
  out.hypothesis_detail = o.detail;
  if (!o.holds) return out;
  out.normalizer = normalizer(g, h);
  out.tower_length = normalizer_tower(g, *out.normalizer).size();
  return out;
}

}  // namespace lietrans
