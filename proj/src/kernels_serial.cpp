#include "lietrans/kernels.hpp"

#include <utility>

namespace lietrans::kernels::serial {

RrefResult rref(const Mat& m) {
  Mat r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t p = lead;
    while (p < r.rows() && r(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(lead, j));
    const Rat inv = r(lead, col).inverse();
    for (std::size_t j = 0; j < r.cols(); ++j) r(lead, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, col).is_zero()) continue;
      const Rat f = r(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j).sub_mul(f, r(lead, j));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

std::optional<Triple> first_antisymmetry_violation(std::span<const Rat> c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c[(i * n + j) * n + k] != -c[(j * n + i) * n + k]) return Triple{i, j, k};
  return std::nullopt;
}

std::optional<Triple> first_jacobi_violation(std::span<const Rat> c, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rat& {
    return c[(i * n + j) * n + k];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rat s;
          for (std::size_t m = 0; m < n; ++m) {
            s.add_mul(at(i, j, m), at(m, k, l));
            s.add_mul(at(j, k, m), at(m, i, l));
            s.add_mul(at(k, i, m), at(m, j, l));
          }
          if (!s.is_zero()) return Triple{i, j, k};
        }
  return std::nullopt;
}

Mat killing_matrix(std::span<const Rat> c, std::size_t n) {
  Mat kf(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) kf(i, j).add_mul(c[(i * n + k) * n + l], c[(j * n + l) * n + k]);
  return kf;
}

Mat leibniz_system(std::span<const Rat> c, std::size_t n) {
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  Mat sys(pairs * n, n * n);
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++p)
      for (std::size_t l = 0; l < n; ++l) {
        auto row = sys.row(p * n + l);
        for (std::size_t k = 0; k < n; ++k) row[l * n + k] += c[(i * n + j) * n + k];
        for (std::size_t m = 0; m < n; ++m) {
          row[m * n + i] -= c[(m * n + j) * n + l];
          row[m * n + j] -= c[(i * n + m) * n + l];
        }
      }
  return sys;
}

}  // namespace lietrans::kernels::serial
