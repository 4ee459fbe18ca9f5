#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "lietrans/lie_algebra.hpp"

namespace lietrans::testing {

inline Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Subspace span(std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> vs;
  for (auto r : rows) vs.push_back(vec(r));
  return Subspace::span(n, vs);
}

inline Subalgebra sub(const LieAlgebra& g, std::initializer_list<std::initializer_list<long>> rows) {
  return Subalgebra(g, span(g.dim(), rows));
}

inline Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rat(d(rng));
  return m;
}

// Unit upper-triangular times unit lower-triangular, so always invertible.
inline Mat random_invertible(std::mt19937_64& rng, std::size_t n) {
  Mat u = Mat::identity(n), l = Mat::identity(n);
  std::uniform_int_distribution<long> d(-2, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      u(i, j) = Rat(d(rng));
      l(j, i) = Rat(d(rng));
    }
  return u * l;
}

}  // namespace lietrans::testing
