#include "lietrans/kernels.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lietrans::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

namespace {

constexpr std::size_t kBlockRows = 32;

// v -= v[pivot] * row, for each basis row whose pivot entry in v is nonzero.
void reduce_against(Vec& v, const std::vector<Vec>& basis, const std::vector<std::size_t>& pivots,
                    std::size_t first, std::size_t last) {
  for (std::size_t b = first; b < last; ++b) {
    const Rat f = v[pivots[b]];
    if (f.is_zero()) continue;
    const Vec& r = basis[b];
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!r[j].is_zero()) v[j].sub_mul(f, r[j]);
  }
}

}  // namespace

RrefResult rref(const Mat& m) {
  const std::size_t cols = m.cols();
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;

  for (std::size_t start = 0; start < m.rows(); start += kBlockRows) {
    const std::size_t end = std::min(m.rows(), start + kBlockRows);
    std::vector<Vec> block;
    block.reserve(end - start);
    for (std::size_t i = start; i < end; ++i)
      if (!is_zero(m.row(i))) block.push_back(m.row_vec(i));

    const std::size_t settled = basis.size();
    const auto nblock = static_cast<long>(block.size());
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < nblock; ++t) reduce_against(block[t], basis, pivots, 0, settled);

    for (Vec& v : block) {
      reduce_against(v, basis, pivots, settled, basis.size());
      const auto lead = std::find_if(v.begin(), v.end(), [](const Rat& x) { return !x.is_zero(); });
      if (lead == v.end()) continue;
      const auto p = static_cast<std::size_t>(lead - v.begin());
      const Rat inv = v[p].inverse();
      for (Rat& x : v) x *= inv;

      const auto nbasis = static_cast<long>(basis.size());
#pragma omp parallel for schedule(static)
      for (long b = 0; b < nbasis; ++b) {
        Vec& r = basis[b];
        const Rat f = r[p];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < cols; ++j)
          if (!v[j].is_zero()) r[j].sub_mul(f, v[j]);
      }
      basis.push_back(std::move(v));
      pivots.push_back(p);
    }
  }

  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });

  RrefResult out{Mat(m.rows(), cols), {}};
  out.pivots.reserve(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    std::copy(basis[order[r]].begin(), basis[order[r]].end(), out.reduced.row(r).begin());
    out.pivots.push_back(pivots[order[r]]);
  }
  return out;
}

std::optional<Triple> first_jacobi_violation(std::span<const Rat> c, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rat& {
    return c[(i * n + j) * n + k];
  };
  // Per-i first violation; the smallest i with one wins.
  std::vector<std::optional<Triple>> found(n);
  const auto ni = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long si = 0; si < ni; ++si) {
    const auto i = static_cast<std::size_t>(si);
    Vec s(n);
    for (std::size_t j = i + 1; j < n && !found[i]; ++j)
      for (std::size_t k = j + 1; k < n && !found[i]; ++k) {
        std::fill(s.begin(), s.end(), Rat());
        for (std::size_t m = 0; m < n; ++m) {
          const Rat& a = at(i, j, m);
          const Rat& b = at(j, k, m);
          const Rat& d = at(k, i, m);
          if (a.is_zero() && b.is_zero() && d.is_zero()) continue;
          for (std::size_t l = 0; l < n; ++l) {
            s[l].add_mul(a, at(m, k, l));
            s[l].add_mul(b, at(m, i, l));
            s[l].add_mul(d, at(m, j, l));
          }
        }
        if (!is_zero(s)) found[i] = Triple{i, j, k};
      }
  }
  for (const auto& f : found)
    if (f) return f;
  return std::nullopt;
}

Mat killing_matrix(std::span<const Rat> c, std::size_t n) {
  Mat kf(n, n);
  const auto ni = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long si = 0; si < ni; ++si) {
    const auto i = static_cast<std::size_t>(si);
    for (std::size_t j = i; j < n; ++j) {
      Rat s;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) s.add_mul(c[(i * n + k) * n + l], c[(j * n + l) * n + k]);
      kf(i, j) = s;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) kf(i, j) = kf(j, i);
  return kf;
}

Mat leibniz_system(std::span<const Rat> c, std::size_t n) {
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  Mat sys(pairs * n, n * n);
  std::vector<std::pair<std::size_t, std::size_t>> index;
  index.reserve(pairs);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) index.emplace_back(i, j);

  const auto np = static_cast<long>(pairs);
#pragma omp parallel for schedule(static)
  for (long sp = 0; sp < np; ++sp) {
    const auto p = static_cast<std::size_t>(sp);
    const auto [i, j] = index[p];
    for (std::size_t l = 0; l < n; ++l) {
      auto row = sys.row(p * n + l);
      for (std::size_t k = 0; k < n; ++k) row[l * n + k] += c[(i * n + j) * n + k];
      for (std::size_t m = 0; m < n; ++m) {
        row[m * n + i] -= c[(m * n + j) * n + l];
        row[m * n + j] -= c[(i * n + m) * n + l];
      }
    }
  }
  return sys;
}

}  // namespace parallel
}  // namespace lietrans::kernels
