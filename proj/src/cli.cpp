#include "lietrans/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lietrans/catalog.hpp"
#include "lietrans/derivations.hpp"
#include "lietrans/errors.hpp"
#include "lietrans/transitivity.hpp"
#include "lietrans/verify.hpp"

namespace lietrans::cli {

using nlohmann::json;

LieAlgebra load_source(std::string_view src) {
  constexpr std::string_view prefix = "catalog:";
  if (src.substr(0, prefix.size()) == prefix) return catalog::get(src.substr(prefix.size())).algebra;
  return catalog::load(std::filesystem::path(std::string(src)));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

std::vector<Vec> parse_basis_spec(std::string_view spec, std::size_t dim) {
  std::vector<Vec> out;
  std::size_t vi = 0;
  for (std::string_view part : split(spec, ';')) {
    const std::string where = "--sub vector " + std::to_string(vi++);
    part = trim(part);
    if (part.empty()) throw ParseError(where, "empty vector");
    Vec v;
    for (std::string_view tok : split(part, ',')) {
      tok = trim(tok);
      try {
        v.push_back(Rat::parse(tok));
      } catch (const ParseError& e) {
        throw ParseError(where, e.what());
      }
    }
    if (v.size() != dim)
      throw ParseError(where, "has " + std::to_string(v.size()) + " coordinates, algebra has dimension " +
                                  std::to_string(dim));
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

json to_json(std::span<const Rat> v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(x.str());
  return a;
}

json to_json(const Mat& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const Subspace& s) { return to_json(s.basis()); }

std::string basis_text(const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string t;
  for (std::size_t i = 0; i < s.dim(); ++i) t += (i ? "; " : "") + to_string(s.basis().row(i));
  return t;
}

struct Report {
  std::vector<std::string> command;
  json checks = json::array();
  json payload = json::object();
  std::ostringstream human;
  bool failed = false;

  Report() { human << std::boolalpha; }

  void check(const std::string& name, const std::string& status, const std::string& detail = {}) {
    checks.push_back({{"name", name}, {"status", status}, {"detail", detail}});
    if (status == "fail" || status == "error") failed = true;
  }
  int exit_code() const { return failed ? kFailed : kOk; }

  void emit(std::ostream& out, int code) const {
    out << human.str() << kMachineSeparator << '\n';
    json doc{{"command", command}, {"checks", checks}, {"payload", payload}, {"exit_code", code}};
    out << doc.dump(2) << '\n';
  }
};

Subalgebra sub_from_spec(const LieAlgebra& g, const std::string& spec) {
  return Subalgebra(g, Subspace::span(g.dim(), parse_basis_spec(spec, g.dim())));
}

void cmd_validate(Report& r, const std::string& path) {
  try {
    const LieAlgebra g = load_source(path);
    r.human << "valid Lie algebra '" << g.name() << "' of dimension " << g.dim() << '\n';
    r.payload = {{"name", g.name()}, {"dim", g.dim()}, {"valid", true}};
    r.check("validate", "pass");
  } catch (const ValidationError& e) {
    r.human << "invalid: " << e.what() << '\n';
    r.payload = {{"valid", false}, {"reason", e.what()}};
    r.check("validate", "fail", e.what());
  }
}

void cmd_info(Report& r, const std::string& src) {
  const LieAlgebra g = load_source(src);
  const catalog::Facts f = catalog::compute_facts(g);
  const Subspace z = center(g).space(), d = derived_subalgebra(g).space(), rad = radical(g).space();
  r.human << "algebra     " << g.name() << '\n'
          << "dim         " << f.dim << '\n'
          << "center      dim " << f.center << ": " << basis_text(z) << '\n'
          << "derived     dim " << f.derived << ": " << basis_text(d) << '\n'
          << "radical     dim " << f.radical << ": " << basis_text(rad) << '\n'
          << "D(g)        dim " << f.derivations << '\n'
          << "perfect     " << f.perfect << '\n'
          << "complete    " << f.complete << '\n'
          << "semisimple  " << f.semisimple << '\n';
  r.payload = {{"name", g.name()},         {"dim", f.dim},           {"center", to_json(z)},
               {"derived", to_json(d)},    {"radical", to_json(rad)}, {"derivations_dim", f.derivations},
               {"perfect", f.perfect},     {"complete", f.complete}, {"semisimple", f.semisimple}};
  r.check("info", "pass");
}

void cmd_derivations(Report& r, const std::string& src) {
  const LieAlgebra g = load_source(src);
  const DerivationAlgebra d = derivation_algebra(g);
  r.human << "D(" << g.name() << ") has dimension " << d.dim() << ", inner part " << d.inner.dim() << '\n';
  json basis = json::array();
  for (std::size_t a = 0; a < d.dim(); ++a) {
    r.human << "  f" << a << " = " << to_string(d.realization[a]) << '\n';
    basis.push_back(to_json(d.realization[a]));
  }
  const bool complete = is_complete(d);
  r.human << "complete: " << complete << '\n';
  r.payload = {{"dim", d.dim()}, {"inner_dim", d.inner.dim()}, {"complete", complete}, {"basis", basis}};
  r.check("derivations", "pass");
}

void cmd_tower(Report& r, const std::string& src, std::optional<std::size_t> max_steps) {
  const LieAlgebra g = load_source(src);
  const TowerReport t = derivation_tower(g, max_steps);
  json dims = json::array();
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    r.human << "stage " << i << ": dim " << t.stages[i].dim() << '\n';
    dims.push_back(t.stages[i].dim());
  }
  if (t.stabilized_at)
    r.human << "stabilized at stage " << *t.stabilized_at << '\n';
  else
    r.human << "budget exhausted before a complete stage\n";
  r.payload = {{"stage_dims", dims},
               {"stabilized_at", t.stabilized_at ? json(*t.stabilized_at) : json(nullptr)}};
  r.check("tower", "pass", t.stabilized_at ? "stabilized" : "budget exhausted");
}

void cmd_subideal(Report& r, const std::string& src, const std::string& sub) {
  const LieAlgebra g = load_source(src);
  const Subalgebra h = sub_from_spec(g, sub);
  const SubidealResult res = subideal_chain(g, h);
  json series = json::array();
  for (const Subspace& s : res.series) series.push_back(to_json(s));
  if (res.chain) {
    r.human << "subideal: yes, chain of length " << res.chain->length() << '\n';
    json chain = json::array();
    for (const Subalgebra& l : res.chain->links()) {
      r.human << "  dim " << l.dim() << ": " << basis_text(l.space()) << '\n';
      chain.push_back(to_json(l.space()));
    }
    r.payload = {{"subideal", true}, {"chain", chain}};
    r.check("chain re-verification", res.chain->verify() ? "pass" : "fail");
  } else {
    r.human << "subideal: no; closure series stops at dim " << res.floor().dim() << ": " << basis_text(res.floor())
            << '\n';
    r.payload = {{"subideal", false}, {"floor", to_json(res.floor())}};
    r.check("subideal", "pass", "not a subideal");
  }
  r.payload["series"] = series;
}

void cmd_ideal(Report& r, const std::string& src, const std::string& sub) {
  const LieAlgebra g = load_source(src);
  const Subalgebra h = sub_from_spec(g, sub);
  const bool ideal = is_ideal(g, h);
  r.human << "ideal: " << (ideal ? "true" : "false") << '\n';
  r.payload = {{"ideal", ideal}};
  r.check("ideal", "pass");
}

void cmd_counterexample(Report& r, const std::string& src) {
  const LieAlgebra h = load_source(src);
  const CounterexampleCertificate c = counterexample_extension(h);
  r.human << "h = " << h.name() << " (dim " << h.dim() << ") is not perfect\n"
          << "k = " << c.k.name() << " (dim " << c.k.dim() << ")\n"
          << "f = " << to_string(c.derivation_f) << '\n'
          << "H(k) has dimension " << c.ambient.dim() << '\n'
          << "chain dims:";
  json chain = json::array();
  for (const Subalgebra& l : c.chain.links()) {
    r.human << ' ' << l.dim();
    chain.push_back(to_json(l.space()));
  }
  r.human << "\nwitness [(X_o,0,0), (0,0,f)] with X_o = e" << c.x_index << '\n'
          << "escaping value " << to_string(c.escaping_value) << " lies outside h x| 0\n";
  const bool ok = c.verify();
  r.payload = {{"h", json::parse(catalog::serialize(h))},
               {"k", json::parse(catalog::serialize(c.k))},
               {"f", to_json(c.derivation_f)},
               {"ambient", json::parse(catalog::serialize(c.ambient))},
               {"chain", chain},
               {"x_index", c.x_index},
               {"witness_left", to_json(c.witness_left)},
               {"witness_right", to_json(c.witness_right)},
               {"escaping_value", to_json(c.escaping_value)},
               {"verified", ok}};
  r.check("certificate", ok ? "pass" : "fail");
}

void cmd_normalizer_tower(Report& r, const std::string& src, const std::string& sub) {
  const LieAlgebra g = load_source(src);
  const std::vector<Subalgebra> tower = normalizer_tower(g, sub_from_spec(g, sub));
  json steps = json::array();
  for (std::size_t i = 0; i < tower.size(); ++i) {
    r.human << "N^" << i << ": dim " << tower[i].dim() << ": " << basis_text(tower[i].space()) << '\n';
    steps.push_back(to_json(tower[i].space()));
  }
  r.human << "self-normalizing: " << (tower.size() == 1 ? "true" : "false") << '\n';
  r.payload = {{"tower", steps}, {"self_normalizing", tower.size() == 1}};
  r.check("normalizer-tower", "pass");
}

void cmd_verify(Report& r, const std::string& suite, std::uint64_t seed, std::size_t random, bool verbose) {
  const verify::SuiteReport rep = verify::run_suite(suite, verify::Options{seed, random});
  json results = json::array();
  std::map<int, std::map<std::string, std::size_t>> tally;
  for (const verify::CheckResult& c : rep.results) {
    const std::string st = verify::to_string(c.status);
    ++tally[c.criterion][st];
    if (verbose || c.status == verify::Status::Fail || c.status == verify::Status::Error)
      r.human << '[' << st << "] " << c.criterion << ' ' << c.suite << ' ' << c.id << ": " << c.detail << '\n';
    results.push_back({{"criterion", c.criterion},
                       {"suite", c.suite},
                       {"group", c.group},
                       {"id", c.id},
                       {"status", st},
                       {"detail", c.detail}});
    r.check(c.suite + ": " + c.id, st, c.detail);
  }
  for (const auto& [crit, counts] : tally) {
    r.human << "criterion " << crit << ':';
    for (const auto& [st, n] : counts) r.human << ' ' << st << '=' << n;
    r.human << '\n';
  }
  r.human << "total " << rep.results.size() << " checks, " << rep.count(verify::Status::Fail) << " failed, "
          << rep.count(verify::Status::Error) << " errors\n";
  r.payload = {{"suite", suite}, {"seed", seed}, {"random", random}, {"results", results}};
}

void cmd_catalog_list(Report& r) {
  json names = json::array();
  for (const std::string& n : catalog::list()) {
    r.human << n << '\n';
    names.push_back(n);
  }
  r.payload = {{"names", names}};
  r.check("catalog list", "pass");
}

void cmd_catalog_show(Report& r, const std::string& name) {
  const catalog::Entry e = catalog::get(name);
  r.human << catalog::serialize(e.algebra) << "expected: " << e.expected.str() << '\n';
  json subspaces = json::object(), forms = json::object(), maps = json::object();
  for (const auto& [tag, s] : e.subspaces) {
    r.human << "subspace " << tag << ": " << basis_text(s) << '\n';
    subspaces[tag] = to_json(s);
  }
  for (const auto& [tag, f] : e.forms) {
    r.human << "form " << tag << ": " << to_string(f.matrix()) << '\n';
    forms[tag] = to_json(f.matrix());
  }
  for (const auto& [tag, m] : e.maps) {
    r.human << "map " << tag << ": " << to_string(m.matrix()) << '\n';
    maps[tag] = to_json(m.matrix());
  }
  r.payload = {{"algebra", json::parse(catalog::serialize(e.algebra))},
               {"subspaces", subspaces},
               {"forms", forms},
               {"maps", maps}};
  r.check("catalog show", "pass");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie algebra toolkit: subideals, derivations, transitivity checks", "lietrans"};
  app.require_subcommand(1);

  std::string src, sub, suite = "all", name;
  std::optional<std::size_t> max_steps;
  std::uint64_t seed = 1;
  std::size_t random = 50;
  bool verbose = false;

  auto* validate = app.add_subcommand("validate", "Check antisymmetry and the Jacobi identity of a file");
  validate->add_option("file", src, "Structure-constant file")->required();
  auto* info = app.add_subcommand("info", "Center, derived algebra, radical and flags");
  info->add_option("source", src, "File or catalog:NAME")->required();
  auto* derivations = app.add_subcommand("derivations", "Derivation algebra D(g)");
  derivations->add_option("source", src, "File or catalog:NAME")->required();
  auto* tower = app.add_subcommand("tower", "Derivation tower of a centerless algebra");
  tower->add_option("source", src, "File or catalog:NAME")->required();
  tower->add_option("--max-steps", max_steps, "Step budget (default dim^2 + 1)");
  auto* subideal = app.add_subcommand("subideal", "Decide subideality and print a chain of ideals");
  subideal->add_option("source", src, "File or catalog:NAME")->required();
  subideal->add_option("--sub", sub, "Basis of h, e.g. \"1,0,0;0,0,1\"")->required();
  auto* ideal = app.add_subcommand("ideal", "Decide whether h is an ideal");
  ideal->add_option("source", src, "File or catalog:NAME")->required();
  ideal->add_option("--sub", sub, "Basis of h")->required();
  auto* counter = app.add_subcommand("counterexample", "Certificate that a non-perfect algebra is not transitive");
  counter->add_option("source", src, "File or catalog:NAME")->required();
  auto* ntower = app.add_subcommand("normalizer-tower", "h, N(h), N(N(h)), ...");
  ntower->add_option("source", src, "File or catalog:NAME")->required();
  ntower->add_option("--sub", sub, "Basis of h")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Run the theorem-verification corpus");
  verify_cmd->add_option("--suite", suite, "perfect|complete|radical|forms|selfnorm|all")
      ->check(CLI::IsMember({"perfect", "complete", "radical", "forms", "selfnorm", "all"}));
  verify_cmd->add_option("--seed", seed, "Seed of the randomized corpus");
  verify_cmd->add_option("--random", random, "Number of randomized instances");
  verify_cmd->add_flag("--verbose", verbose, "Print every check, not only failures");
  auto* cat = app.add_subcommand("catalog", "Reference algebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List catalog names");
  auto* cat_show = cat->add_subcommand("show", "Show an entry with its tags");
  cat_show->add_option("name", name, "Catalog name")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  Report r;
  r.command = args;
  try {
    if (validate->parsed()) cmd_validate(r, src);
    else if (info->parsed()) cmd_info(r, src);
    else if (derivations->parsed()) cmd_derivations(r, src);
    else if (tower->parsed()) cmd_tower(r, src, max_steps);
    else if (subideal->parsed()) cmd_subideal(r, src, sub);
    else if (ideal->parsed()) cmd_ideal(r, src, sub);
    else if (counter->parsed()) cmd_counterexample(r, src);
    else if (ntower->parsed()) cmd_normalizer_tower(r, src, sub);
    else if (verify_cmd->parsed()) cmd_verify(r, suite, seed, random, verbose);
    else if (cat_list->parsed()) cmd_catalog_list(r);
    else if (cat_show->parsed()) cmd_catalog_show(r, name);
  } catch (const InvariantViolation& e) {
    r.check("internal", "error", e.what());
    err << "internal error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    // Parse, validation, precondition and I/O problems all mean bad input.
    err << "error: " << e.what() << '\n';
    r.check("input", "error", e.what());
    r.emit(out, kBadInput);
    return kBadInput;
  }
  const int code = r.exit_code();
  r.emit(out, code);
  return code;
}

}  // namespace lietrans::cli
