#include <doctest.h>

#include "lietrans/catalog.hpp"
#include "lietrans/derivations.hpp"
#include "lietrans/errors.hpp"
#include "lietrans/verify.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace lietrans;
using namespace lietrans::testing;

namespace {

std::vector<LieAlgebra> corpus() {
  std::vector<LieAlgebra> gs;
  for (const std::string& name : catalog::list()) gs.push_back(catalog::get(name).algebra);
  for (const LieAlgebra& g : verify::random_mixed(2, 6)) gs.push_back(g);
  return gs;
}

}  // namespace

TEST_CASE("derivation algebra dimensions") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(derivation_algebra(catalog::abelian(n)).dim() == n * n);
  CHECK(derivation_algebra(catalog::heisenberg3()).dim() == 6);
  const DerivationAlgebra d = derivation_algebra(catalog::sl2());
  CHECK(d.dim() == 3);
  CHECK(d.inner.is_full());
}

TEST_CASE("heisenberg3 derivations scale z by the trace on span(x, y)") {
  for (const Mat& f : derivation_algebra(catalog::heisenberg3()).realization) {
    CHECK(f(2, 2) == f(0, 0) + f(1, 1));
    CHECK(f(0, 2).is_zero());
    CHECK(f(1, 2).is_zero());
  }
}

TEST_CASE("completeness") {
  CHECK(is_complete(catalog::sl2()));
  CHECK(is_complete(catalog::aff1()));
  CHECK(derivation_algebra(catalog::aff1()).dim() == 2);
  CHECK_FALSE(is_complete(catalog::heisenberg3()));
  CHECK_FALSE(is_complete(catalog::sl2_rad2()));
}

TEST_CASE("holomorph of abelian(1) is aff1") {
  const Holomorph h = holomorph(catalog::abelian(1));
  REQUIRE(h.algebra.dim() == 2);
  CHECK(change_basis(h.algebra, Mat::from_rows({{0, 1}, {1, 0}})) == catalog::aff1());
}

TEST_CASE("holomorph of sl2") {
  const Holomorph h = holomorph(catalog::sl2());
  CHECK(h.algebra.dim() == 6);
  const DerivationAlgebra& d = h.derivations;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t a = 0; a < d.dim(); ++a) {
      const Vec lhs = h.embed_base.apply(unit_vector(3, x));
      const Vec rhs = h.embed_derivations.apply(unit_vector(d.dim(), a));
      const Vec expected = h.embed_base.apply(Rat(-1) * d.realization[a].apply(unit_vector(3, x)));
      CHECK(bracket(h.algebra, lhs, rhs) == expected);
    }
}

TEST_CASE("property: holomorph bracket formula and base ideal") {
  for (const LieAlgebra& g : corpus()) {
    CAPTURE(g.name());
    const Holomorph h = holomorph(g);
    CHECK(validate(h.algebra).ok());
    CHECK(is_ideal(h.algebra, h.embed_base.image()));
    CHECK(is_homomorphism(h.embed_base));
    CHECK(is_homomorphism(h.embed_derivations));
    const DerivationAlgebra& d = h.derivations;
    for (std::size_t a = 0; a < d.dim(); ++a)
      for (std::size_t y = 0; y < g.dim(); ++y) {
        const Vec fy = d.realization[a].apply(unit_vector(g.dim(), y));
        CHECK(bracket(h.algebra, h.embed_derivations.apply(unit_vector(d.dim(), a)),
                      h.embed_base.apply(unit_vector(g.dim(), y))) == h.embed_base.apply(fy));
      }
  }
}

TEST_CASE("derivation towers") {
  CHECK(derivation_tower(catalog::aff1()).stabilized_at == std::optional<std::size_t>(0));
  CHECK(derivation_tower(catalog::sl2()).stabilized_at == std::optional<std::size_t>(0));
  CHECK_THROWS_AS(derivation_tower(catalog::heisenberg3()), PreconditionError);
  const TowerReport t = derivation_tower(catalog::sl2_rad2());
  REQUIRE(t.stabilized_at.has_value());
  CHECK(*t.stabilized_at >= 1);
  for (const LinMap& e : t.embeddings) {
    CHECK(e.is_injective());
    CHECK(is_homomorphism(e));
  }
  const TowerReport cut = derivation_tower(catalog::sl2_rad2(), 0);
  CHECK_FALSE(cut.stabilized_at.has_value());
}

TEST_CASE("theorem_derived_check") {
  for (const LieAlgebra& g : {catalog::sl2(), catalog::aff1(), catalog::get("sl2_sum_aff1").algebra}) {
    const DerivedTowerCheck c = theorem_derived_check(g);
    CHECK(c.d_complete);
    CHECK(c.ideal_in_d2);
  }
  CHECK(theorem_derived_check(catalog::sl2_rad2()).consistent());
}

TEST_CASE("characteristic ideals") {
  for (const std::string& name : catalog::list()) {
    const LieAlgebra g = catalog::get(name).algebra;
    CHECK(is_characteristic(g, derived_subalgebra(g)));
  }
  const LieAlgebra h3 = catalog::heisenberg3();
  CHECK(is_characteristic(h3, sub(h3, {{0, 0, 1}})));
  const LieAlgebra k = direct_sum(catalog::aff1(), catalog::abelian(1)).algebra;
  CHECK_FALSE(is_characteristic(k, sub(k, {{1, 0, 0}, {0, 1, 0}})));
  CHECK_THROWS_AS(is_characteristic(h3, sub(h3, {{1, 0, 0}})), PreconditionError);
}

TEST_CASE("property: Leibniz rule, inner ideal and the ad identity") {
  for (const LieAlgebra& g : corpus()) {
    CAPTURE(g.name());
    const DerivationAlgebra d = derivation_algebra(g);
    for (const Mat& f : d.realization) CHECK(is_derivation(g, f));
    CHECK(commutator_with_inner_identity(d));
    CHECK(is_ideal(d.algebra, d.inner));
    CHECK(d.dim() == oracle::derivation_dim(g));
    if (center(g).dim() == 0) CHECK(vanishing_on_inner_forces_zero(g));
  }
}

TEST_CASE("coordinates and realize are inverse") {
  const DerivationAlgebra d = derivation_algebra(catalog::heisenberg3());
  for (std::size_t a = 0; a < d.dim(); ++a) {
    const Vec e = unit_vector(d.dim(), a);
    CHECK(d.coordinates(d.realize(e)) == e);
  }
  CHECK_THROWS(d.coordinates(Mat::identity(3)));
}
