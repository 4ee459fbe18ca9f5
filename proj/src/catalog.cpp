#include "lietrans/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "lietrans/derivations.hpp"
#include "lietrans/errors.hpp"

namespace lietrans::catalog {

using nlohmann::json;

std::string Facts::str() const {
  std::ostringstream os;
  os << "dim=" << dim << " center=" << center << " derived=" << derived << " radical=" << radical
     << " derivations=" << derivations << " perfect=" << perfect << " complete=" << complete
     << " semisimple=" << semisimple;
  return os.str();
}

Facts compute_facts(const LieAlgebra& g) {
  Facts f;
  f.dim = g.dim();
  f.center = center(g).dim();
  f.derived = derived_subalgebra(g).dim();
  f.radical = radical(g).dim();
  const DerivationAlgebra d = derivation_algebra(g);
  f.derivations = d.dim();
  f.perfect = f.derived == f.dim;
  f.complete = is_complete(d);
  f.semisimple = is_semisimple(g);
  return f;
}

namespace {

template <class T>
const T& find_tag(const Tagged<T>& items, std::string_view tag, const std::string& entry) {
  for (const auto& [name, value] : items)
    if (name == tag) return value;
  throw std::out_of_range("catalog entry " + entry + " has no tag '" + std::string(tag) + "'");
}

Vec vec(std::initializer_list<Rat> xs) { return Vec(xs); }

Subspace span(std::size_t n, std::initializer_list<Vec> vs) { return Subspace::span(n, std::vector<Vec>(vs)); }

Mat diagonal(std::initializer_list<Rat> d) {
  Mat m(d.size(), d.size());
  std::size_t i = 0;
  for (const Rat& x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// Matrix-unit brackets [e_ij, e_kl] = d_jk e_il - d_li e_kj on the given units.
LieAlgebra matrix_units(const std::vector<std::pair<std::size_t, std::size_t>>& units,
                        std::string name) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t a = 0; a < units.size(); ++a) index[units[a]] = a;
  LieAlgebra::Builder b(units.size(), std::move(name));
  for (std::size_t a = 0; a < units.size(); ++a)
    for (std::size_t c = a + 1; c < units.size(); ++c) {
      const auto [i, j] = units[a];
      const auto [k, l] = units[c];
      Vec v(units.size());
      if (j == k) v[index.at({i, l})] += 1;
      if (l == i) v[index.at({k, j})] -= 1;
      b.set(a, c, v);
    }
  return b.build();
}

std::optional<std::size_t> parse_family(std::string_view name, std::string_view family) {
  if (name.size() <= family.size() + 2 || name.substr(0, family.size()) != family) return std::nullopt;
  if (name[family.size()] != '(' || name.back() != ')') return std::nullopt;
  const std::string_view digits = name.substr(family.size() + 1, name.size() - family.size() - 2);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || n == 0) return std::nullopt;
  return n;
}

const std::map<std::string, Facts>& goldens() {
  // dim, center, derived, radical, derivations, perfect, complete, semisimple
  static const std::map<std::string, Facts> table{
      {"abelian(1)", {1, 1, 0, 1, 1, false, false, false}},
      {"abelian(2)", {2, 2, 0, 2, 4, false, false, false}},
      {"abelian(3)", {3, 3, 0, 3, 9, false, false, false}},
      {"abelian(4)", {4, 4, 0, 4, 16, false, false, false}},
      {"heisenberg3", {3, 1, 1, 3, 6, false, false, false}},
      {"aff1", {2, 0, 1, 2, 2, false, true, false}},
      {"sl2", {3, 0, 3, 0, 3, true, true, true}},
      {"so3", {3, 0, 3, 0, 3, true, true, true}},
      {"gl2", {4, 1, 3, 1, 4, false, false, false}},
      {"upper_triangular(3)", {6, 1, 3, 6, 8, false, false, false}},
      {"sl2_rad2", {5, 0, 5, 2, 6, true, false, false}},
      {"sl2_sum_aff1", {5, 0, 4, 2, 5, false, true, false}},
      {"so3_sum_so3", {6, 0, 6, 0, 6, true, true, true}},
      {"sl2_sum_so3", {6, 0, 6, 0, 6, true, true, true}},
  };
  return table;
}

Facts golden_for(const std::string& name, const LieAlgebra& g) {
  auto it = goldens().find(name);
  if (it != goldens().end()) return it->second;
  // Families outside the frozen table: closed forms.
  const std::size_t n = g.dim();
  if (name.starts_with("abelian(")) return {n, n, 0, n, n * n, false, false, false};
  return compute_facts(g);
}

// sl2 tags in the basis (H, E, F).
void tag_sl2(Entry& e) {
  const LieAlgebra& g = e.algebra;
  e.subspaces = {{"H", span(3, {vec({1, 0, 0})})},
                 {"E", span(3, {vec({0, 1, 0})})},
                 {"F", span(3, {vec({0, 0, 1})})},
                 {"u", span(3, {vec({0, 1, -1})})},
                 {"p", span(3, {vec({1, 0, 0}), vec({0, 1, 1})})},
                 {"borel", span(3, {vec({1, 0, 0}), vec({0, 1, 0})})}};
  // The identity form in the basis (E - F, H, E + F).
  e.forms = {{"killing", killing_form(g)}, {"compact_embedding", SymForm(g, diagonal({1, Rat(1, 2), Rat(1, 2)}))}};
  e.maps = {{"theta", LinMap(g, g, Mat::from_rows({{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}))}};
}

void tag_so3(Entry& e) {
  const LieAlgebra& g = e.algebra;
  e.subspaces = {{"e1", span(3, {vec({1, 0, 0})})},
                 {"e2", span(3, {vec({0, 1, 0})})},
                 {"e3", span(3, {vec({0, 0, 1})})}};
  e.forms = {{"killing", killing_form(g)}, {"neg_killing", SymForm(g, Rat(2) * Mat::identity(3))}};
  e.maps = {{"theta", LinMap(g, g, Mat::identity(3))}};
}

}  // namespace

const Subspace& Entry::subspace(std::string_view tag) const { return find_tag(subspaces, tag, name); }
const SymForm& Entry::form(std::string_view tag) const { return find_tag(forms, tag, name); }
const LinMap& Entry::map(std::string_view tag) const { return find_tag(maps, tag, name); }

LieAlgebra abelian(std::size_t n) { return LieAlgebra::Builder(n, "abelian(" + std::to_string(n) + ")").build(); }

LieAlgebra heisenberg3() { return LieAlgebra::Builder(3, "heisenberg3").set(0, 1, 2, 1).build(); }

LieAlgebra aff1() { return LieAlgebra::Builder(2, "aff1").set(0, 1, 1, 1).build(); }

LieAlgebra sl2() {
  return LieAlgebra::Builder(3, "sl2").set(0, 1, 1, 2).set(0, 2, 2, -2).set(1, 2, 0, 1).build();
}

LieAlgebra so3() {
  return LieAlgebra::Builder(3, "so3").set(0, 1, 2, 1).set(1, 2, 0, 1).set(0, 2, 1, -1).build();
}

LieAlgebra gl(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) units.emplace_back(i, j);
  return matrix_units(units, "gl" + std::to_string(n));
}

LieAlgebra upper_triangular(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) units.emplace_back(i, j);
  return matrix_units(units, "upper_triangular(" + std::to_string(n) + ")");
}

LieAlgebra sl2_rad2() {
  // H, E, F, v1, v2 with Q^2 = span(v1, v2) the standard module.
  return LieAlgebra::Builder(5, "sl2_rad2")
      .set(0, 1, 1, 2)
      .set(0, 2, 2, -2)
      .set(1, 2, 0, 1)
      .set(0, 3, 3, 1)
      .set(0, 4, 4, -1)
      .set(1, 4, 3, 1)
      .set(2, 3, 4, 1)
      .build();
}

std::vector<std::string> list() {
  return {"abelian(1)", "abelian(2)", "abelian(3)",          "abelian(4)", "heisenberg3",  "aff1",
          "sl2",        "so3",        "gl2",                 "upper_triangular(3)", "sl2_rad2", "sl2_sum_aff1",
          "so3_sum_so3", "sl2_sum_so3"};
}

Entry get(std::string_view name_view) {
  const std::string name(name_view);
  Entry e;
  e.name = name;
  if (auto n = parse_family(name, "abelian")) {
    e.algebra = abelian(*n);
  } else if (auto m = parse_family(name, "upper_triangular")) {
    e.algebra = upper_triangular(*m);
  } else if (name == "heisenberg3") {
    e.algebra = heisenberg3();
    e.subspaces = {{"x", span(3, {vec({1, 0, 0})})},
                   {"xz", span(3, {vec({1, 0, 0}), vec({0, 0, 1})})},
                   {"z", span(3, {vec({0, 0, 1})})}};
  } else if (name == "aff1") {
    e.algebra = aff1();
    e.subspaces = {{"x", span(2, {vec({1, 0})})}, {"y", span(2, {vec({0, 1})})}};
  } else if (name == "sl2") {
    e.algebra = sl2();
    tag_sl2(e);
  } else if (name == "so3") {
    e.algebra = so3();
    tag_so3(e);
  } else if (name == "gl2") {
    e.algebra = gl(2);
    e.subspaces = {{"sl2", span(4, {vec({1, 0, 0, -1}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0})})},
                   {"scalars", span(4, {vec({1, 0, 0, 1})})}};
  } else if (name == "sl2_rad2") {
    e.algebra = sl2_rad2();
    e.subspaces = {{"levi", span(5, {vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0}), vec({0, 0, 1, 0, 0})})},
                   {"module", span(5, {vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 1})})}};
  } else if (name == "sl2_sum_aff1") {
    e.algebra = direct_sum(sl2(), aff1(), name).algebra;
    e.subspaces = {{"sl2", span(5, {vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0}), vec({0, 0, 1, 0, 0})})},
                   {"aff1", span(5, {vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 1})})}};
  } else if (name == "so3_sum_so3") {
    const LieAlgebra g = direct_sum(so3(), so3(), name).algebra;
    e.algebra = g;
    e.subspaces = {{"first", span(6, {vec({1, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0}), vec({0, 0, 1, 0, 0, 0})})},
                   {"second", span(6, {vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 0, 1})})},
                   {"e3_first", span(6, {vec({0, 0, 1, 0, 0, 0})})},
                   {"diagonal", span(6, {vec({1, 0, 0, 1, 0, 0}), vec({0, 1, 0, 0, 1, 0}), vec({0, 0, 1, 0, 0, 1})})}};
    e.forms = {{"killing", killing_form(g)}, {"neg_killing", SymForm(g, Rat(2) * Mat::identity(6))}};
  } else if (name == "sl2_sum_so3") {
    const LieAlgebra g = direct_sum(sl2(), so3(), name).algebra;
    e.algebra = g;
    e.subspaces = {{"sl2", span(6, {vec({1, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0}), vec({0, 0, 1, 0, 0, 0})})},
                   {"so3", span(6, {vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 0, 1})})},
                   {"u", span(6, {vec({0, 1, -1, 0, 0, 0}), vec({0, 0, 0, 1, 0, 0}), vec({0, 0, 0, 0, 1, 0}),
                                  vec({0, 0, 0, 0, 0, 1})})}};
    e.forms = {{"killing", killing_form(g)}};
    const Mat theta = block_diag(Mat::from_rows({{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}), Mat::identity(3));
    e.maps = {{"theta", LinMap(g, g, theta)}};
  } else {
    throw std::invalid_argument("unknown catalog algebra '" + name + "'");
  }
  e.expected = golden_for(name, e.algebra);
  return e;
}

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

void require_keys(const json& obj, const std::set<std::string>& required, const std::set<std::string>& optional,
                  const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  for (const auto& [key, _] : obj.items())
    if (!required.contains(key) && !optional.contains(key)) throw ParseError(where, "unknown field '" + key + "'");
  for (const std::string& key : required)
    if (!obj.contains(key)) throw ParseError(where, "missing field '" + key + "'");
}

std::size_t index_field(const json& v, const std::string& where) {
  if (!v.is_number_unsigned()) throw ParseError(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

LieAlgebra parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)), "malformed JSON");
  }
  require_keys(doc, {"dim", "brackets"}, {"name"}, "document");
  const std::size_t n = index_field(doc["dim"], "dim");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc["brackets"].is_array()) throw ParseError("brackets", "expected an array");

  LieAlgebra::Builder b(n, name);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  std::size_t r = 0;
  for (const json& rec : doc["brackets"]) {
    const std::string where = "brackets[" + std::to_string(r++) + "]";
    require_keys(rec, {"i", "j", "k", "v"}, {}, where);
    const std::size_t i = index_field(rec["i"], where + ".i");
    const std::size_t j = index_field(rec["j"], where + ".j");
    const std::size_t k = index_field(rec["k"], where + ".k");
    if (!(i < j && j < n)) throw ParseError(where, "indices must satisfy 0 <= i < j < dim");
    if (k >= n) throw ParseError(where + ".k", "index out of range");
    if (!rec["v"].is_string()) throw ParseError(where + ".v", "expected a rational string");
    if (!seen.emplace(i, j, k).second) throw ParseError(where, "duplicate entry");
    Rat v;
    try {
      v = Rat::parse(rec["v"].get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ".v", e.what());
    }
    b.set(i, j, k, v);
  }
  return b.build();
}

std::string serialize(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::ostringstream os;
  os << "{\n  \"dim\": " << n << ",\n  \"name\": " << json(g.name()).dump() << ",\n  \"brackets\": [";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rat& v = g.c(i, j, k);
        if (v.is_zero()) continue;
        os << (first ? "\n" : ",\n") << "    {\"i\": " << i << ", \"j\": " << j << ", \"k\": " << k << ", \"v\": \""
           << v.str() << "\"}";
        first = false;
      }
  os << (first ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

LieAlgebra load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void save(const LieAlgebra& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize(g);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace lietrans::catalog
