#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "lietrans/catalog.hpp"
#include "lietrans/errors.hpp"
#include "oracles/oracles.hpp"

using namespace lietrans;

namespace {

std::string bracket_doc(std::size_t dim, const std::string& brackets) {
  return "{\"dim\": " + std::to_string(dim) + ", \"brackets\": [" + brackets + "]}";
}

std::string where_of(const std::string& text) {
  try {
    catalog::parse(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("catalog entries") {
  const catalog::Entry sl2 = catalog::get("sl2");
  CHECK(sl2.expected.derived == 3);
  CHECK(sl2.expected.perfect);
  CHECK(sl2.expected.complete);
  const catalog::Entry h3 = catalog::get("heisenberg3");
  CHECK(h3.expected.center == 1);
  CHECK(h3.expected.derivations == 6);
  const catalog::Entry a4 = catalog::get("abelian(4)");
  CHECK(a4.expected.radical == 4);
  CHECK_FALSE(a4.expected.perfect);
  CHECK(catalog::get("abelian(7)").expected.derivations == 49);
  CHECK(catalog::get("upper_triangular(2)").algebra.dim() == 3);
  CHECK_THROWS_AS(catalog::get("e8"), std::invalid_argument);
  CHECK_THROWS_AS(catalog::get("abelian(0)"), std::invalid_argument);
  CHECK_THROWS_AS(sl2.subspace("nope"), std::out_of_range);
}

TEST_CASE("every catalog entry is valid and reproduces its goldens") {
  for (const std::string& name : catalog::list()) {
    CAPTURE(name);
    const catalog::Entry e = catalog::get(name);
    CHECK(validate(e.algebra).ok());
    CHECK(catalog::compute_facts(e.algebra) == e.expected);
    CHECK(oracle::derivation_dim(e.algebra) == e.expected.derivations);
    for (const auto& [tag, s] : e.subspaces)
      if (tag != "p") CHECK(is_bracket_closed(e.algebra, s));
  }
}

TEST_CASE("goldens match the frozen sympy oracle output") {
  std::ifstream in(std::filesystem::path(LIETRANS_TEST_DATA_DIR) / "oracles" / "frozen_facts.json");
  REQUIRE(in);
  const nlohmann::json frozen = nlohmann::json::parse(in);
  CHECK(frozen.size() == catalog::list().size());
  for (const auto& [name, f] : frozen.items()) {
    CAPTURE(name);
    const catalog::Facts want{f.at("dim"),         f.at("center"),  f.at("derived"),  f.at("radical"),
                              f.at("derivations"), f.at("perfect"), f.at("complete"), f.at("semisimple")};
    CHECK(catalog::get(name).expected == want);
  }
}

TEST_CASE("save and load round-trip") {
  const auto dir = std::filesystem::temp_directory_path() / "lietrans_catalog_test";
  std::filesystem::create_directories(dir);
  for (const std::string& name : catalog::list()) {
    const LieAlgebra g = catalog::get(name).algebra;
    const auto path = dir / "algebra.json";
    catalog::save(g, path);
    const LieAlgebra back = catalog::load(path);
    CHECK(back == g);
    CHECK(back.name() == g.name());
    CHECK(catalog::serialize(back) == catalog::serialize(g));
  }
  std::filesystem::remove_all(dir);
  CHECK_THROWS(catalog::load(dir / "missing.json"));
}

TEST_CASE("a single bracket gives heisenberg3") {
  const LieAlgebra g = catalog::parse(bracket_doc(3, R"({"i": 0, "j": 1, "k": 2, "v": "1"})"));
  CHECK(g == catalog::heisenberg3());
}

TEST_CASE("Jacobi violations are rejected with the triple") {
  const std::string bad = bracket_doc(3, R"({"i": 0, "j": 1, "k": 0, "v": "1"}, {"i": 1, "j": 2, "k": 1, "v": "1"})");
  CHECK_THROWS_AS(catalog::parse(bad), ValidationError);
  try {
    catalog::parse(bad);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("(0,1,2)") != std::string::npos);
  }
}

TEST_CASE("the cyclic tensor c01^2 = c02^1 = c12^0 = 1 satisfies Jacobi") {
  const LieAlgebra g = catalog::parse(bracket_doc(
      3, R"({"i": 0, "j": 1, "k": 2, "v": "1"}, {"i": 0, "j": 2, "k": 1, "v": "1"}, {"i": 1, "j": 2, "k": 0, "v": "1"})"));
  CHECK(catalog::compute_facts(g) == catalog::get("sl2").expected);
}

TEST_CASE("strict parsing") {
  CHECK(where_of("{\"dim\": 2,\n \"brackets\": [}") == "line 2");
  CHECK(where_of(R"({"brackets": []})") == "document");
  CHECK(where_of(R"({"dim": 2})") == "document");
  CHECK(where_of(R"({"dim": -1, "brackets": []})") == "dim");
  CHECK(where_of(R"({"dim": 2, "brackets": [], "extra": 1})") == "document");
  CHECK(where_of(bracket_doc(2, R"({"i": 1, "j": 0, "k": 0, "v": "1"})")) == "brackets[0]");
  CHECK(where_of(bracket_doc(2, R"({"i": 0, "j": 2, "k": 0, "v": "1"})")) == "brackets[0]");
  CHECK(where_of(bracket_doc(2, R"({"i": 0, "j": 1, "k": 5, "v": "1"})")) == "brackets[0].k");
  CHECK(where_of(bracket_doc(2, R"({"i": 0, "j": 1, "k": 0, "v": 1})")) == "brackets[0].v");
  CHECK(where_of(bracket_doc(2, R"({"i": 0, "j": 1, "k": 0, "v": "1/0"})")) == "brackets[0].v");
  CHECK(where_of(bracket_doc(2, R"({"i": 0, "j": 1, "k": 0})")) == "brackets[0]");
  CHECK(where_of(bracket_doc(2, R"({"i": 0, "j": 1, "k": 0, "v": "1", "w": 2})")) == "brackets[0]");
  CHECK(where_of(bracket_doc(2, R"({"i": 0, "j": 1, "k": 1, "v": "1"}, {"i": 0, "j": 1, "k": 1, "v": "2"})")) ==
        "brackets[1]");
  CHECK(where_of(bracket_doc(2, R"({"i": 0, "j": 1, "k": 1, "v": "1/2"})")) == "<accepted>");
}

TEST_CASE("serialization is canonical") {
  const std::string text = catalog::serialize(catalog::aff1());
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc.at("dim") == 2);
  CHECK(doc.at("name") == "aff1");
  REQUIRE(doc.at("brackets").size() == 1);
  CHECK(doc.at("brackets")[0] == nlohmann::json{{"i", 0}, {"j", 1}, {"k", 1}, {"v", "1"}});
}
