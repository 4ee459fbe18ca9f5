#include <doctest.h>

#include <random>

#include "lietrans/catalog.hpp"
#include "lietrans/kernels.hpp"
#include "lietrans/verify.hpp"
#include "support.hpp"

using namespace lietrans;

namespace {

std::vector<LieAlgebra> corpus() {
  std::vector<LieAlgebra> gs;
  for (const std::string& name : catalog::list()) gs.push_back(catalog::get(name).algebra);
  for (const LieAlgebra& g : verify::random_mixed(3, 8)) gs.push_back(g);
  return gs;
}

}  // namespace

TEST_CASE("parallel rref matches the serial reference") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 12;
    const Mat m = testing::random_matrix(rng, rows, cols, -2, 2);
    const auto s = kernels::serial::rref(m);
    const auto p = kernels::parallel::rref(m);
    CHECK(s.reduced == p.reduced);
    CHECK(s.pivots == p.pivots);
  }
}

TEST_CASE("parallel Lie kernels match the serial reference") {
  for (const LieAlgebra& g : corpus()) {
    CAPTURE(g.name());
    const auto c = g.tensor();
    CHECK(kernels::serial::killing_matrix(c, g.dim()) == kernels::parallel::killing_matrix(c, g.dim()));
    CHECK(kernels::serial::leibniz_system(c, g.dim()) == kernels::parallel::leibniz_system(c, g.dim()));
    CHECK(kernels::serial::first_jacobi_violation(c, g.dim()) == kernels::parallel::first_jacobi_violation(c, g.dim()));
  }
}

TEST_CASE("Jacobi kernels agree on a violating tensor") {
  const std::size_t n = 4;
  Vec c(n * n * n);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
    c[(i * n + j) * n + k] = Rat(v);
    c[(j * n + i) * n + k] = Rat(-v);
  };
  set(0, 1, 0, 1);
  set(1, 2, 1, 1);
  set(2, 3, 3, 1);
  const auto s = kernels::serial::first_jacobi_violation(c, n);
  REQUIRE(s.has_value());
  CHECK(*s == kernels::Triple{0, 1, 2});
  CHECK(kernels::parallel::first_jacobi_violation(c, n) == s);
  CHECK_FALSE(kernels::serial::first_antisymmetry_violation(c, n).has_value());
}
