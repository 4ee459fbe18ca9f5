#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lietrans/catalog.hpp"
#include "lietrans/cli.hpp"
#include "lietrans/errors.hpp"

using namespace lietrans;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;

  json machine() const {
    const auto pos = out.find(cli::kMachineSeparator);
    REQUIRE(pos != std::string::npos);
    return json::parse(out.substr(pos + cli::kMachineSeparator.size()));
  }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("subideal prints a chain of length 3 for span(x) in heisenberg3") {
  const Run r = run({"subideal", "catalog:heisenberg3", "--sub", "1,0,0"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("chain of length 3") != std::string::npos);
  const json m = r.machine();
  CHECK(m["payload"]["subideal"] == true);
  CHECK(m["payload"]["chain"].size() == 3);
  CHECK(m["exit_code"] == 0);
}

TEST_CASE("printed chains re-verify through the ideal command") {
  const json chain = run({"subideal", "catalog:heisenberg3", "--sub", "1,0,0"}).machine()["payload"]["chain"];
  auto spec = [](const json& basis) {
    std::string s;
    for (const json& row : basis) {
      if (!s.empty()) s += ';';
      std::string v;
      for (const json& x : row) v += (v.empty() ? "" : ",") + x.get<std::string>();
      s += v;
    }
    return s;
  };
  // Each link, written out as an algebra of its own, must contain the previous link as an ideal.
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const LieAlgebra g = catalog::heisenberg3();
    const Subalgebra top(g, Subspace::span(3, cli::parse_basis_spec(spec(chain[i + 1]), 3)));
    const LieAlgebra t = top.as_algebra();
    const auto path = write_temp("lietrans_link.json", catalog::serialize(t));
    std::vector<Vec> coords;
    for (const Vec& v : cli::parse_basis_spec(spec(chain[i]), 3)) coords.push_back(top.space().coordinates(v));
    std::string sub;
    for (const Vec& v : coords) sub += (sub.empty() ? "" : ";") + to_string(v);
    const Run r = run({"ideal", path.string(), "--sub", sub});
    CHECK(r.code == 0);
    CHECK(r.machine()["payload"]["ideal"] == true);
  }
}

TEST_CASE("ideal reports false as a successful verdict") {
  const Run r = run({"ideal", "catalog:heisenberg3", "--sub", "1,0,0"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("ideal: false") != std::string::npos);
  CHECK(r.machine()["payload"]["ideal"] == false);
}

TEST_CASE("counterexample on a perfect algebra is a precondition error") {
  const Run r = run({"counterexample", "catalog:sl2"});
  CHECK(r.code == cli::kBadInput);
  CHECK(r.err.find("h is perfect") != std::string::npos);
}

TEST_CASE("counterexample certificate for aff1") {
  const Run r = run({"counterexample", "catalog:aff1"});
  CHECK(r.code == cli::kOk);
  const json p = r.machine()["payload"];
  CHECK(p["verified"] == true);
  CHECK(p["k"]["dim"] == 3);
  CHECK(catalog::parse(p["ambient"].dump()).dim() == 7);
}

TEST_CASE("validate") {
  const auto good = write_temp("lietrans_good.json", catalog::serialize(catalog::sl2()));
  CHECK(run({"validate", good.string()}).code == cli::kOk);

  const auto bad = write_temp(
      "lietrans_bad.json",
      R"({"dim": 3, "brackets": [{"i": 0, "j": 1, "k": 0, "v": "1"}, {"i": 1, "j": 2, "k": 1, "v": "1"}]})");
  const Run r = run({"validate", bad.string()});
  CHECK(r.code == cli::kFailed);
  CHECK(r.machine()["payload"]["valid"] == false);
  CHECK(run({"info", bad.string()}).code == cli::kBadInput);

  const auto broken = write_temp("lietrans_broken.json", "{\"dim\": 3,\n\"brackets\": [");
  const Run b = run({"validate", broken.string()});
  CHECK(b.code == cli::kBadInput);
  CHECK(b.err.find("line 2") != std::string::npos);
  CHECK(run({"validate", "/nonexistent/file.json"}).code == cli::kBadInput);
}

TEST_CASE("info, derivations and towers") {
  const json info = run({"info", "catalog:gl2"}).machine()["payload"];
  CHECK(info["dim"] == 4);
  CHECK(info["center"].size() == 1);
  CHECK(info["derived"].size() == 3);
  CHECK(info["complete"] == false);

  const Run d = run({"derivations", "catalog:heisenberg3"});
  CHECK(d.code == 0);
  CHECK(d.machine()["payload"]["dim"] == 6);

  CHECK(run({"tower", "catalog:aff1"}).machine()["payload"]["stabilized_at"] == 0);
  CHECK(run({"tower", "catalog:heisenberg3"}).code == cli::kBadInput);
  const Run cut = run({"tower", "catalog:sl2_rad2", "--max-steps", "0"});
  CHECK(cut.code == cli::kOk);
  CHECK(cut.machine()["payload"]["stabilized_at"].is_null());
}

TEST_CASE("normalizer tower and negative subideal verdicts") {
  const json t = run({"normalizer-tower", "catalog:heisenberg3", "--sub", "1,0,0"}).machine()["payload"];
  CHECK(t["tower"].size() == 3);
  const Run n = run({"subideal", "catalog:sl2", "--sub", "0,1,0"});
  CHECK(n.code == cli::kOk);
  CHECK(n.machine()["payload"]["subideal"] == false);
  CHECK(n.machine()["payload"]["floor"].size() == 3);
}

TEST_CASE("bad basis specs") {
  CHECK(run({"ideal", "catalog:sl2", "--sub", "0,1,0;0,0,1"}).code == cli::kBadInput);
  CHECK(run({"ideal", "catalog:sl2", "--sub", "1,0"}).code == cli::kBadInput);
  CHECK(run({"ideal", "catalog:sl2", "--sub", "1,x,0"}).code == cli::kBadInput);
  CHECK(run({"ideal", "catalog:nope", "--sub", "1"}).code == cli::kBadInput);
  CHECK_THROWS_AS(cli::parse_basis_spec("1,2;", 2), ParseError);
  const auto vs = cli::parse_basis_spec(" 1/2, -3 ; 0,1 ", 2);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0] == Vec{Rat(1, 2), Rat(-3)});
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == cli::kBadInput);
  CHECK(run({"frobnicate"}).code == cli::kBadInput);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kBadInput);
  const Run h = run({"--help"});
  CHECK(h.code == cli::kOk);
  CHECK(h.out.find("subideal") != std::string::npos);
}

TEST_CASE("catalog commands") {
  const json names = run({"catalog", "list"}).machine()["payload"]["names"];
  CHECK(names.size() == catalog::list().size());
  const json show = run({"catalog", "show", "sl2"}).machine()["payload"];
  CHECK(show["maps"].contains("theta"));
  CHECK(show["subspaces"]["u"].size() == 1);
  CHECK(run({"catalog", "show", "nope"}).code == cli::kBadInput);
}

TEST_CASE("verify is reproducible for a fixed seed") {
  const Run a = run({"verify", "--suite", "complete", "--seed", "4"});
  const Run b = run({"verify", "--suite", "complete", "--seed", "4"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  const Run c = run({"verify", "--suite", "forms", "--seed", "4"});
  CHECK(c.code == cli::kOk);
  CHECK(c.out == run({"verify", "--suite", "forms", "--seed", "4"}).out);
  CHECK(c.machine()["payload"]["results"].size() > 10);
}
