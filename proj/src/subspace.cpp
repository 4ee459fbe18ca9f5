#include "lietrans/subspace.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "lietrans/errors.hpp"

namespace lietrans {

RrefResult rref(const Mat& m) { return kernels::parallel::rref(m); }

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, Mat(0, ambient), {}); }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(ambient, Mat::identity(ambient), std::move(piv));
}

Subspace Subspace::row_space(const Mat& rows) {
  const std::size_t ambient = rows.cols();
  RrefResult r = rref(rows);
  const std::size_t k = r.pivots.size();
  Vec data(r.reduced.flat().begin(), r.reduced.flat().begin() + static_cast<std::ptrdiff_t>(k * ambient));
  return Subspace(ambient, Mat::from_flat(k, ambient, std::move(data)), std::move(r.pivots));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return zero(ambient);
  return row_space(Mat::from_rows(ambient, vectors));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vec(i));
  return out;
}

Vec Subspace::reduce(std::span<const Rat> v) const {
  if (v.size() != ambient_) throw DimensionError("Subspace::reduce: vector length mismatch");
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rat f = r[pivots_[i]];
    if (f.is_zero()) continue;
    auto row = basis_.row(i);
    for (std::size_t j = 0; j < ambient_; ++j) r[j].sub_mul(f, row[j]);
  }
  return r;
}

bool Subspace::contains(std::span<const Rat> v) const { return lietrans::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("Subspace::contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coordinates(std::span<const Rat> v) const {
  if (!contains(v)) throw PreconditionError("Subspace::coordinates: vector not in subspace");
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Mat Subspace::annihilator() const {
  if (dim() == 0) return Mat::identity(ambient_);
  return nullspace(basis_).basis();
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << "; ";
    os << to_string(basis_.row(i));
  }
  os << "} in Q^" << ambient_;
  return os.str();
}

Subspace nullspace(const Mat& m) {
  const std::size_t n = m.cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;

  std::vector<Vec> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Mat inverse(const Mat& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionError("inverse: matrix is not square");
  if (n == 0) return Mat(0, 0);
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw PreconditionError("inverse: matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("sum: ambient mismatch");
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  return Subspace::row_space(vstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("intersect: ambient mismatch");
  if (u.is_zero() || v.is_zero()) return Subspace::zero(u.ambient_dim());
  if (u.is_full()) return v;
  if (v.is_full()) return u;
  return nullspace(vstack(u.annihilator(), v.annihilator()));
}

Subspace orthogonal_complement(const Mat& form, const Subspace& u) {
  const std::size_t n = u.ambient_dim();
  if (form.rows() != n || form.cols() != n) throw DimensionError("orthogonal_complement: form shape mismatch");
  if (u.is_zero()) return Subspace::full(n);
  return nullspace(u.basis() * form);
}

Mat restrict_form(const Mat& form, const Subspace& u) {
  const std::size_t n = u.ambient_dim();
  if (form.rows() != n || form.cols() != n) throw DimensionError("restrict_form: form shape mismatch");
  return u.basis() * form * u.basis().transpose();
}

std::string Inertia::str() const {
  std::ostringstream os;
  os << '(' << n_plus << ',' << n_minus << ',' << n_zero << ')';
  return os.str();
}

Inertia inertia(const Mat& form, const Subspace& u) {
  if (!form.is_symmetric()) throw std::invalid_argument("inertia: form is not symmetric");
  Mat g = restrict_form(form, u);
  const std::size_t d = g.rows();

  auto swap_sym = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d; ++j) std::swap(g(a, j), g(b, j));
    for (std::size_t i = 0; i < d; ++i) std::swap(g(i, a), g(i, b));
  };

  Inertia out;
  std::size_t k = 0;
  while (k < d) {
    std::size_t piv = k;
    while (piv < d && g(piv, piv).is_zero()) ++piv;
    if (piv == d) {
      // All remaining diagonal entries vanish: fold row/col j into i so the
      // new diagonal entry is 2 g(i, j).
      std::size_t bi = d, bj = d;
      for (std::size_t i = k; i < d && bi == d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          if (!g(i, j).is_zero()) {
            bi = i;
            bj = j;
            break;
          }
      if (bi == d) {
        out.n_zero += d - k;
        break;
      }
      for (std::size_t j = 0; j < d; ++j) g(bi, j) += g(bj, j);
      for (std::size_t i = 0; i < d; ++i) g(i, bi) += g(i, bj);
      piv = bi;
    }
    swap_sym(k, piv);
    const Rat p = g(k, k);
    (p.sign() > 0 ? out.n_plus : out.n_minus) += 1;
    for (std::size_t a = k + 1; a < d; ++a) {
      if (g(a, k).is_zero()) continue;
      const Rat f = g(a, k) / p;
      for (std::size_t b = k + 1; b < d; ++b) g(a, b).sub_mul(f, g(k, b));
    }
    for (std::size_t a = k + 1; a < d; ++a) g(a, k) = g(k, a) = Rat();
    ++k;
  }
  return out;
}

Inertia inertia(const Mat& form) { return inertia(form, Subspace::full(form.rows())); }

}  // namespace lietrans
