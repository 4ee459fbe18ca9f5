#include <doctest.h>

#include <random>

#include "lietrans/catalog.hpp"
#include "lietrans/errors.hpp"
#include "lietrans/verify.hpp"
#include "support.hpp"

using namespace lietrans;
using namespace lietrans::testing;

namespace {

std::vector<LieAlgebra> catalog_algebras() {
  std::vector<LieAlgebra> gs;
  for (const std::string& name : catalog::list()) gs.push_back(catalog::get(name).algebra);
  return gs;
}

const LieAlgebra h3 = catalog::heisenberg3();
const LieAlgebra sl2 = catalog::sl2();

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(catalog::abelian(3)).ok());
  CHECK(validate(h3).ok());

  Vec c(8);
  c[2] = 1;  // c_{01}^0
  c[4] = 1;  // c_{10}^0
  const ValidationReport r = validate(LieAlgebra::from_tensor(2, c));
  CHECK(r.kind == ValidationReport::Kind::Antisymmetry);
  CHECK(r.triple == std::array<std::size_t, 3>{0, 1, 0});
  CHECK_THROWS_AS(LieAlgebra::checked(2, c), ValidationError);
  CHECK_THROWS_AS(LieAlgebra::from_tensor(2, Vec(7)), DimensionError);
}

TEST_CASE("brackets and adjoint matrices") {
  for (const LieAlgebra& g : catalog_algebras()) {
    Vec x = zeros(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) x[i] = Rat(long(i) - 1);
    CHECK(is_zero(bracket(g, x, x)));
  }
  CHECK(bracket(h3, vec({1, 0, 0}), vec({0, 1, 0})) == vec({0, 0, 1}));
  const Mat ad_h = adjoint_matrix(sl2, vec({1, 0, 0})).matrix();
  CHECK(ad_h == Mat::from_rows({{0, 0, 0}, {0, 2, 0}, {0, 0, -2}}));
}

TEST_CASE("bracket_spaces") {
  CHECK(bracket_spaces(h3, Subspace::full(3), Subspace::zero(3)).is_zero());
  CHECK(bracket_spaces(h3, Subspace::full(3), Subspace::full(3)) == span(3, {{0, 0, 1}}));
  CHECK(bracket_spaces(sl2, Subspace::full(3), Subspace::full(3)) == Subspace::full(3));
}

TEST_CASE("derived subalgebra and perfectness") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(derived_subalgebra(catalog::abelian(n)).dim() == 0);
    CHECK_FALSE(is_perfect(catalog::abelian(n)));
  }
  CHECK(derived_subalgebra(sl2).dim() == 3);
  CHECK(is_perfect(sl2));
  const LieAlgebra p5 = catalog::sl2_rad2();
  CHECK(is_perfect(p5));
  CHECK_FALSE(inertia(killing_form(p5).matrix()).nondegenerate());
}

TEST_CASE("center, centralizer, normalizer") {
  CHECK(center(h3).space() == span(3, {{0, 0, 1}}));
  CHECK(normalizer(h3, sub(h3, {{1, 0, 0}})).space() == span(3, {{1, 0, 0}, {0, 0, 1}}));
  CHECK(normalizer(sl2, sub(sl2, {{1, 0, 0}})).space() == span(3, {{1, 0, 0}}));
  CHECK(centralizer(sl2, sub(sl2, {{1, 0, 0}})).space() == span(3, {{1, 0, 0}}));
  CHECK_THROWS_AS(sub(sl2, {{0, 1, 0}, {0, 0, 1}}), PreconditionError);
}

TEST_CASE("ideals") {
  const LieAlgebra a = catalog::aff1();
  CHECK(is_ideal(a, sub(a, {{0, 1}})));
  CHECK_FALSE(is_ideal(h3, sub(h3, {{1, 0, 0}})));
  for (const LieAlgebra& g : catalog_algebras()) CHECK(is_ideal(g, derived_subalgebra(g)));
}

TEST_CASE("Killing form") {
  CHECK(killing_form(catalog::abelian(3)).matrix().is_zero());
  CHECK(killing_form(sl2).matrix() == Mat::from_rows({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
  CHECK(killing_form(catalog::so3()).matrix() == Rat(-2) * Mat::identity(3));
}

TEST_CASE("radical and semisimplicity") {
  CHECK(radical(sl2).dim() == 0);
  CHECK(is_semisimple(sl2));
  CHECK(radical(catalog::upper_triangular(3)).space().is_full());
  const catalog::Entry gl2 = catalog::get("gl2");
  CHECK(radical(gl2.algebra).space() == gl2.subspace("scalars"));
  CHECK(radical(catalog::sl2_rad2()).space() == catalog::get("sl2_rad2").subspace("module"));
}

TEST_CASE("quotients") {
  const Quotient q0 = quotient(h3, Subspace::zero(3));
  CHECK(q0.algebra == h3);
  const LieAlgebra a = catalog::aff1();
  CHECK(quotient(a, span(2, {{0, 1}})).algebra == catalog::abelian(1));
  const Quotient q = quotient(h3, span(3, {{0, 0, 1}}));
  CHECK(q.algebra == catalog::abelian(2));
  CHECK(is_homomorphism(q.projection));
  CHECK(q.projection.image().is_full());
  CHECK(q.projection.kernel() == span(3, {{0, 0, 1}}));
  CHECK_THROWS_AS(quotient(h3, span(3, {{1, 0, 0}})), PreconditionError);
}

TEST_CASE("direct sums and series") {
  CHECK(direct_sum(catalog::abelian(1), catalog::abelian(1)).algebra == catalog::abelian(2));
  const DirectSum s = direct_sum(catalog::aff1(), catalog::abelian(1));
  CHECK(center(s.algebra).space() == span(3, {{0, 0, 1}}));
  CHECK(is_homomorphism(s.embed_first));
  CHECK(is_homomorphism(s.embed_second));

  const std::vector<Subspace> series = derived_series(catalog::upper_triangular(3));
  REQUIRE(series.size() == 4);
  CHECK(series[3].is_zero());
  CHECK(is_solvable(catalog::upper_triangular(3)));
  CHECK(is_nilpotent(h3));
  CHECK_FALSE(is_nilpotent(catalog::aff1()));
  CHECK(lower_central_series(h3).back().is_zero());
}

TEST_CASE("homomorphisms and automorphisms") {
  CHECK(is_automorphism(LinMap(sl2, sl2, Mat::identity(3))));
  const LinMap theta = catalog::get("sl2").map("theta");
  CHECK(is_automorphism(theta));
  CHECK(theta.matrix() * theta.matrix() == Mat::identity(3));
  const LinMap swap(h3, h3, Mat::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK_FALSE(is_homomorphism(swap));
}

TEST_CASE("generated subalgebras and change of basis") {
  CHECK(generated_subalgebra(sl2, {vec({0, 1, 0}), vec({0, 0, 1})}).space().is_full());
  CHECK(generated_subalgebra(h3, {vec({1, 0, 0})}).dim() == 1);
  std::mt19937_64 rng(3);
  for (const LieAlgebra& g : catalog_algebras()) {
    const Mat p = random_invertible(rng, g.dim());
    const LieAlgebra h = change_basis(g, p);
    CHECK(validate(h).ok());
    CHECK(catalog::compute_facts(h) == catalog::compute_facts(g));
    CHECK(is_homomorphism(LinMap(h, g, p)));
  }
}

TEST_CASE("property: constructions stay valid") {
  for (const LieAlgebra& g : verify::random_mixed(5, 12)) {
    CAPTURE(g.name());
    CHECK(validate(g).ok());
    CHECK(validate(direct_sum(g, catalog::aff1()).algebra).ok());
    const Subspace d = derived_subalgebra(g).space();
    CHECK(validate(quotient(g, d).algebra).ok());
  }
}

TEST_CASE("property: Killing form is ad-invariant") {
  std::vector<LieAlgebra> gs = catalog_algebras();
  for (const LieAlgebra& g : verify::random_mixed(9, 6)) gs.push_back(g);
  for (const LieAlgebra& g : gs) {
    CAPTURE(g.name());
    const SymForm k = killing_form(g);
    const std::size_t n = g.dim();
    bool ok = true;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const Vec ex = unit_vector(n, x), ey = unit_vector(n, y), ez = unit_vector(n, z);
          if (!(k(bracket(g, ex, ey), ez) + k(ey, bracket(g, ex, ez))).is_zero()) ok = false;
        }
    CHECK(ok);
  }
}

TEST_CASE("property: normalizers contain h as an ideal") {
  for (const LieAlgebra& g : catalog_algebras()) {
    for (const Subspace& s : verify::probe_subalgebras(g)) {
      const Subalgebra h(g, s);
      const Subalgebra n = normalizer(g, h);
      CHECK(n.space().contains(s));
      CHECK(normalizes(g, n.space(), s));
    }
  }
}

TEST_CASE("property: radical is a solvable ideal with semisimple quotient") {
  std::vector<LieAlgebra> gs = catalog_algebras();
  for (const LieAlgebra& g : verify::random_mixed(21, 8)) gs.push_back(g);
  for (const LieAlgebra& g : gs) {
    CAPTURE(g.name());
    const Subalgebra r = radical(g);
    CHECK(is_ideal(g, r));
    CHECK(is_solvable(r.as_algebra()));
    const LieAlgebra q = quotient(g, r.space()).algebra;
    CHECK(inertia(killing_form(q).matrix()).nondegenerate());
  }
}
