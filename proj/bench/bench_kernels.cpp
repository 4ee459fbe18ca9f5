#include <random>

#include <benchmark/benchmark.h>

#include "lietrans/catalog.hpp"
#include "lietrans/derivations.hpp"
#include "lietrans/kernels.hpp"

using namespace lietrans;

namespace {

Mat random_matrix(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(rows * 1000 + cols);
  std::uniform_int_distribution<long> d(-3, 3);
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(d(rng));
  return m;
}

// Dimensions 10, 11 and 15.
LieAlgebra algebra_of_size(int which) {
  switch (which) {
    case 0: return catalog::upper_triangular(4);
    case 1: return holomorph(catalog::sl2_rad2()).algebra;
    default: return holomorph(direct_sum(catalog::sl2_rad2(), catalog::aff1()).algebra).algebra;
  }
}

template <auto Fn>
void bm_rref(benchmark::State& state) {
  const Mat m = random_matrix(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(m));
}

template <auto Fn>
void bm_tensor(benchmark::State& state) {
  const LieAlgebra g = algebra_of_size(static_cast<int>(state.range(0)));
  state.SetLabel(std::to_string(g.dim()) + "-dim");
  for (auto _ : state) benchmark::DoNotOptimize(Fn(g.tensor(), g.dim()));
}

}  // namespace

BENCHMARK(bm_rref<kernels::serial::rref>)->Name("rref/serial")->Args({60, 30})->Args({200, 60});
BENCHMARK(bm_rref<kernels::parallel::rref>)->Name("rref/parallel")->Args({60, 30})->Args({200, 60});
BENCHMARK(bm_tensor<kernels::serial::first_jacobi_violation>)->Name("jacobi/serial")->DenseRange(0, 2);
BENCHMARK(bm_tensor<kernels::parallel::first_jacobi_violation>)->Name("jacobi/parallel")->DenseRange(0, 2);
BENCHMARK(bm_tensor<kernels::serial::killing_matrix>)->Name("killing/serial")->DenseRange(0, 2);
BENCHMARK(bm_tensor<kernels::parallel::killing_matrix>)->Name("killing/parallel")->DenseRange(0, 2);
BENCHMARK(bm_tensor<kernels::serial::leibniz_system>)->Name("leibniz/serial")->DenseRange(0, 1);
BENCHMARK(bm_tensor<kernels::parallel::leibniz_system>)->Name("leibniz/parallel")->DenseRange(0, 1);

BENCHMARK_MAIN();
