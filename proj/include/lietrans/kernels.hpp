#pragma once

// Hot loops of the toolkit, each in two flavours.
//
// `serial` holds the straightforward reference implementation that the tests
// treat as ground truth. `parallel` holds the OpenMP version the library
// actually calls. Both must return bit-identical results; tests/test_kernels
// and bench/bench_kernels compare them.
//
// Structure tensors are passed flat: c[(i * n + j) * n + k] = c_{ij}^k.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lietrans/matrix.hpp"

namespace lietrans::kernels {

using Triple = std::array<std::size_t, 3>;

struct RrefResult {
  Mat reduced;                      // same shape as the input
  std::vector<std::size_t> pivots;  // strictly increasing
};

namespace serial {

// Gauss-Jordan, one column at a time over the whole matrix.
RrefResult rref(const Mat& m);
// First (i, j, k) in lexicographic order with c_{ij}^k != -c_{ji}^k.
std::optional<Triple> first_antisymmetry_violation(std::span<const Rat> c, std::size_t n);
// First i < j < k in lexicographic order whose cyclic Jacobi sum is nonzero.
std::optional<Triple> first_jacobi_violation(std::span<const Rat> c, std::size_t n);
// K_ij = tr(ad_i ad_j).
Mat killing_matrix(std::span<const Rat> c, std::size_t n);
// Coefficient matrix of the Leibniz rule f[e_i,e_j] = [f e_i, e_j] + [e_i, f e_j]
// over pairs i < j, unknowns F(a, b) at column a * n + b (f e_b = sum_a F(a,b) e_a).
// Row (pair_index * n + l) is the e_l component of the pair's defect.
Mat leibniz_system(std::span<const Rat> c, std::size_t n);

}  // namespace serial

namespace parallel {

// Blocked incremental elimination: each block of input rows is reduced
// against the current basis in parallel, then folded in one row at a time.
RrefResult rref(const Mat& m);
std::optional<Triple> first_jacobi_violation(std::span<const Rat> c, std::size_t n);
Mat killing_matrix(std::span<const Rat> c, std::size_t n);
Mat leibniz_system(std::span<const Rat> c, std::size_t n);

}  // namespace parallel

// Number of worker threads the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace lietrans::kernels
