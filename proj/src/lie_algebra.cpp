#include "lietrans/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "lietrans/errors.hpp"
#include "lietrans/kernels.hpp"

namespace lietrans {

std::string ValidationReport::message() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Valid:
      return "valid";
    case Kind::Antisymmetry:
      os << "antisymmetry violated at (" << triple[0] << ',' << triple[1] << ',' << triple[2]
         << "): c[i][j][k] != -c[j][i][k]";
      break;
    case Kind::Jacobi:
      os << "Jacobi identity violated on basis triple (" << triple[0] << ',' << triple[1] << ',' << triple[2] << ')';
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra() : data_(std::make_shared<const Data>()) {}

LieAlgebra LieAlgebra::from_tensor(std::size_t dim, Vec tensor, std::string name) {
  if (tensor.size() != dim * dim * dim) throw DimensionError("LieAlgebra: tensor size must be dim^3");
  return LieAlgebra(std::make_shared<const Data>(Data{dim, std::move(tensor), std::move(name)}));
}

LieAlgebra LieAlgebra::checked(std::size_t dim, Vec tensor, std::string name) {
  LieAlgebra g = from_tensor(dim, std::move(tensor), std::move(name));
  const ValidationReport rep = validate(g);
  if (!rep.ok()) throw ValidationError(rep.message());
  return g;
}

LieAlgebra::Builder::Builder(std::size_t dim, std::string name)
    : dim_(dim), name_(std::move(name)), c_(dim * dim * dim) {}

LieAlgebra::Builder& LieAlgebra::Builder::set(std::size_t i, std::size_t j, std::size_t k, const Rat& v) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionError("Builder::set: index out of range");
  if (i == j) {
    if (!v.is_zero()) throw ValidationError("Builder::set: [e_i, e_i] must vanish");
    return *this;
  }
  c_[(i * dim_ + j) * dim_ + k] = v;
  c_[(j * dim_ + i) * dim_ + k] = -v;
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::set(std::size_t i, std::size_t j, const Vec& v) {
  if (v.size() != dim_) throw DimensionError("Builder::set: bracket vector length mismatch");
  for (std::size_t k = 0; k < dim_; ++k) set(i, j, k, v[k]);
  return *this;
}

LieAlgebra LieAlgebra::Builder::build() const { return checked(dim_, c_, name_); }

LieAlgebra LieAlgebra::renamed(std::string name) const {
  return LieAlgebra(std::make_shared<const Data>(Data{dim(), data_->c, std::move(name)}));
}

Vec LieAlgebra::bracket(std::span<const Rat> x, std::span<const Rat> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionError("bracket: vector length mismatch");
  Vec z(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rat xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) z[k].add_mul(xy, c(i, j, k));
    }
  }
  return z;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  auto t = tensor().subspan((i * n + j) * n, n);
  return Vec(t.begin(), t.end());
}

Mat LieAlgebra::ad(std::span<const Rat> x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw DimensionError("ad: vector length mismatch");
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j).add_mul(x[i], c(i, j, k));
  }
  return m;
}

Mat LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(dim(), i)); }

bool LieAlgebra::is_abelian() const { return is_zero(tensor()); }

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.data_ == b.data_ || (a.dim() == b.dim() && a.data_->c == b.data_->c);
}

ValidationReport validate(const LieAlgebra& g) {
  ValidationReport rep;
  if (auto t = kernels::serial::first_antisymmetry_violation(g.tensor(), g.dim())) {
    rep.kind = ValidationReport::Kind::Antisymmetry;
    rep.triple = *t;
    return rep;
  }
  if (auto t = kernels::parallel::first_jacobi_violation(g.tensor(), g.dim())) {
    rep.kind = ValidationReport::Kind::Jacobi;
    rep.triple = *t;
  }
  return rep;
}

// ------------------------------------------------------------ LinMap, SymForm

LinMap::LinMap(LieAlgebra source, LieAlgebra target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw DimensionError("LinMap: matrix shape does not match source/target dimensions");
}

Subspace LinMap::image() const { return Subspace::row_space(matrix_.transpose()); }

Subspace LinMap::image(const Subspace& u) const {
  if (u.ambient_dim() != source_.dim()) throw DimensionError("LinMap::image: ambient mismatch");
  if (u.is_zero()) return Subspace::zero(target_.dim());
  return Subspace::row_space(u.basis() * matrix_.transpose());
}

Subspace LinMap::kernel() const { return nullspace(matrix_); }

bool LinMap::is_injective() const { return kernel().is_zero(); }

LinMap compose(const LinMap& outer, const LinMap& inner) {
  if (!(outer.source() == inner.target())) throw DimensionError("compose: intermediate algebras differ");
  return LinMap(inner.source(), outer.target(), outer.matrix() * inner.matrix());
}

SymForm::SymForm(LieAlgebra ambient, Mat matrix) : ambient_(std::move(ambient)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != ambient_.dim() || matrix_.cols() != ambient_.dim())
    throw DimensionError("SymForm: matrix shape does not match algebra dimension");
  if (!matrix_.is_symmetric()) throw std::invalid_argument("SymForm: matrix is not symmetric");
}

Rat SymForm::operator()(std::span<const Rat> x, std::span<const Rat> y) const { return dot(x, matrix_.apply(y)); }

// ---------------------------------------------------------------- Subalgebra

Subalgebra::Subalgebra(LieAlgebra parent, Subspace space) : parent_(std::move(parent)), space_(std::move(space)) {
  if (space_.ambient_dim() != parent_.dim()) throw DimensionError("Subalgebra: ambient mismatch");
  if (!is_bracket_closed(parent_, space_))
    throw PreconditionError("Subalgebra: subspace is not closed under the bracket: " + space_.str());
}

Subalgebra Subalgebra::full(const LieAlgebra& g) { return Subalgebra(g, Subspace::full(g.dim())); }
Subalgebra Subalgebra::zero(const LieAlgebra& g) { return Subalgebra(g, Subspace::zero(g.dim())); }

LieAlgebra Subalgebra::as_algebra(std::string name) const {
  const std::size_t d = dim();
  Vec c(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Vec coords = space_.coordinates(parent_.bracket(space_.basis().row(a), space_.basis().row(b)));
      for (std::size_t k = 0; k < d; ++k) {
        c[(a * d + b) * d + k] = coords[k];
        c[(b * d + a) * d + k] = -coords[k];
      }
    }
  return LieAlgebra::checked(d, std::move(c), std::move(name));
}

LinMap Subalgebra::inclusion() const { return LinMap(as_algebra(), parent_, space_.basis().transpose()); }

// ------------------------------------------------------------ free functions

Vec bracket(const LieAlgebra& g, std::span<const Rat> x, std::span<const Rat> y) { return g.bracket(x, y); }

LinMap adjoint_matrix(const LieAlgebra& g, std::span<const Rat> x) { return LinMap(g, g, g.ad(x)); }

Subspace bracket_spaces(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != g.dim() || v.ambient_dim() != g.dim())
    throw DimensionError("bracket_spaces: ambient mismatch");
  std::vector<Vec> out;
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b) {
      Vec w = g.bracket(u.basis().row(a), v.basis().row(b));
      if (!is_zero(w)) out.push_back(std::move(w));
    }
  return Subspace::span(g.dim(), out);
}

bool normalizes(const LieAlgebra& g, const Subspace& outer, const Subspace& inner) {
  if (outer.ambient_dim() != g.dim() || inner.ambient_dim() != g.dim())
    throw DimensionError("normalizes: ambient mismatch");
  for (std::size_t a = 0; a < outer.dim(); ++a)
    for (std::size_t b = 0; b < inner.dim(); ++b)
      if (!inner.contains(g.bracket(outer.basis().row(a), inner.basis().row(b)))) return false;
  return true;
}

bool is_bracket_closed(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw DimensionError("is_bracket_closed: ambient mismatch");
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(g.bracket(s.basis().row(a), s.basis().row(b)))) return false;
  return true;
}

Subalgebra generated_subalgebra(const LieAlgebra& g, const std::vector<Vec>& generators) {
  Subspace s = Subspace::span(g.dim(), generators);
  for (;;) {
    Subspace next = sum(s, bracket_spaces(g, s, s));
    if (next == s) break;
    s = std::move(next);
  }
  return Subalgebra(g, std::move(s));
}

Subalgebra derived_subalgebra(const Subalgebra& h) {
  return Subalgebra(h.parent(), bracket_spaces(h.parent(), h.space(), h.space()));
}

Subalgebra derived_subalgebra(const LieAlgebra& g) { return derived_subalgebra(Subalgebra::full(g)); }

bool is_perfect(const Subalgebra& h) { return derived_subalgebra(h).space() == h.space(); }

bool is_perfect(const LieAlgebra& g) { return is_perfect(Subalgebra::full(g)); }

Subalgebra center(const LieAlgebra& g) { return centralizer(g, Subspace::full(g.dim())); }

Subalgebra centralizer(const LieAlgebra& g, const Subspace& h) {
  if (h.ambient_dim() != g.dim()) throw DimensionError("centralizer: ambient mismatch");
  Mat stacked(0, g.dim());
  for (std::size_t b = 0; b < h.dim(); ++b) stacked = vstack(stacked, g.ad(h.basis().row(b)));
  return Subalgebra(g, nullspace(stacked));
}

Subalgebra centralizer(const LieAlgebra& g, const Subalgebra& h) { return centralizer(g, h.space()); }

Subalgebra normalizer(const LieAlgebra& g, const Subalgebra& h) {
  const Mat ann = h.space().annihilator();
  Mat stacked(0, g.dim());
  if (ann.rows() > 0)
    for (std::size_t b = 0; b < h.dim(); ++b) stacked = vstack(stacked, ann * g.ad(h.space().basis().row(b)));
  Subspace n = nullspace(stacked);
  if (!n.contains(h.space())) throw InvariantViolation("normalizer: result does not contain h");
  return Subalgebra(g, std::move(n));
}

bool is_ideal(const LieAlgebra& g, const Subspace& h) { return normalizes(g, Subspace::full(g.dim()), h); }

bool is_ideal(const LieAlgebra& g, const Subalgebra& h) { return is_ideal(g, h.space()); }

SymForm killing_form(const LieAlgebra& g) {
  return SymForm(g, kernels::parallel::killing_matrix(g.tensor(), g.dim()));
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> s{Subspace::full(g.dim())};
  for (;;) {
    Subspace next = bracket_spaces(g, s.back(), s.back());
    if (next == s.back()) break;
    s.push_back(std::move(next));
  }
  return s;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const Subspace all = Subspace::full(g.dim());
  std::vector<Subspace> s{all};
  for (;;) {
    Subspace next = bracket_spaces(g, all, s.back());
    if (next == s.back()) break;
    s.push_back(std::move(next));
  }
  return s;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().is_zero(); }

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().is_zero(); }

namespace {

Subalgebra radical_unchecked(const LieAlgebra& g) {
  const Subspace derived = bracket_spaces(g, Subspace::full(g.dim()), Subspace::full(g.dim()));
  return Subalgebra(g, orthogonal_complement(killing_form(g).matrix(), derived));
}

}  // namespace

Subalgebra radical(const LieAlgebra& g) {
  Subalgebra r = radical_unchecked(g);
  if (!is_ideal(g, r)) throw InvariantViolation("radical: Killing-perp of [g,g] is not an ideal");
  if (!is_solvable(r.as_algebra())) throw InvariantViolation("radical: Killing-perp of [g,g] is not solvable");
  const Quotient q = quotient(g, r.space());
  if (!inertia(killing_form(q.algebra).matrix()).nondegenerate())
    throw InvariantViolation("radical: quotient by the radical has degenerate Killing form");
  return r;
}

Subspace radical(const Subalgebra& h) {
  const Subalgebra r = radical(h.as_algebra());
  return h.inclusion().image(r.space());
}

bool is_semisimple(const LieAlgebra& g) {
  const bool by_radical = radical(g).space().is_zero();
  const bool by_killing = inertia(killing_form(g).matrix()).nondegenerate();
  if (by_radical != by_killing)
    throw InvariantViolation("is_semisimple: radical and Killing-form tests disagree");
  return by_killing;
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw DimensionError("quotient: ambient mismatch");
  if (!is_bracket_closed(g, ideal) || !is_ideal(g, ideal)) throw PreconditionError("quotient: subspace is not an ideal");

  const std::size_t n = g.dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) comp.push_back(i);
  const std::size_t q = comp.size();

  auto project = [&](std::span<const Rat> v) {
    const Vec r = ideal.reduce(v);
    Vec out(q);
    for (std::size_t a = 0; a < q; ++a) out[a] = r[comp[a]];
    return out;
  };

  Vec c(q * q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      const Vec w = project(g.bracket_basis(comp[a], comp[b]));
      for (std::size_t k = 0; k < q; ++k) {
        c[(a * q + b) * q + k] = w[k];
        c[(b * q + a) * q + k] = -w[k];
      }
    }
  LieAlgebra qa = LieAlgebra::checked(q, std::move(c), g.name().empty() ? "" : g.name() + "/ideal");

  Mat proj(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec w = project(unit_vector(n, j));
    for (std::size_t a = 0; a < q; ++a) proj(a, j) = w[a];
  }
  return Quotient{qa, LinMap(g, qa, std::move(proj))};
}

DirectSum direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  Vec c(n * n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) c[(i * n + j) * n + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) c[((na + i) * n + na + j) * n + na + k] = b.c(i, j, k);
  if (name.empty() && !a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
  LieAlgebra s = LieAlgebra::checked(n, std::move(c), std::move(name));

  Mat e1(n, na), e2(n, nb);
  for (std::size_t i = 0; i < na; ++i) e1(i, i) = 1;
  for (std::size_t i = 0; i < nb; ++i) e2(na + i, i) = 1;
  return DirectSum{s, LinMap(a, s, std::move(e1)), LinMap(b, s, std::move(e2))};
}

bool is_homomorphism(const LinMap& f) {
  const LieAlgebra& src = f.source();
  const LieAlgebra& dst = f.target();
  const std::size_t n = src.dim();
  std::vector<Vec> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = f.matrix().column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (f.apply(src.bracket_basis(i, j)) != dst.bracket(images[i], images[j])) return false;
  return true;
}

bool is_automorphism(const LinMap& f) {
  if (!(f.source() == f.target())) return false;
  if (rank(f.matrix()) != f.source().dim()) return false;
  return is_homomorphism(f);
}

LieAlgebra change_basis(const LieAlgebra& g, const Mat& basis, std::string name) {
  const std::size_t n = g.dim();
  if (basis.rows() != n || basis.cols() != n) throw DimensionError("change_basis: basis must be dim x dim");
  const Mat inv = inverse(basis);
  std::vector<Vec> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = basis.column(i);
  Vec c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec w = inv.apply(g.bracket(cols[i], cols[j]));
      for (std::size_t k = 0; k < n; ++k) {
        c[(i * n + j) * n + k] = w[k];
        c[(j * n + i) * n + k] = -w[k];
      }
    }
  return LieAlgebra::checked(n, std::move(c), name.empty() ? g.name() : std::move(name));
}

LieAlgebra linear_lie_algebra(const std::vector<Mat>& generators, std::string name) {
  if (generators.empty()) return LieAlgebra::from_tensor(0, {}, std::move(name));
  const std::size_t m = generators.front().rows();
  for (const Mat& x : generators)
    if (x.rows() != m || x.cols() != m) throw DimensionError("linear_lie_algebra: generators must be square and equal size");

  auto as_matrix = [m](std::span<const Rat> flat) { return Mat::from_flat(m, m, Vec(flat.begin(), flat.end())); };

  std::vector<Vec> flat;
  for (const Mat& x : generators) flat.push_back(x.flat());
  Subspace s = Subspace::span(m * m, flat);
  for (;;) {
    std::vector<Vec> more;
    for (std::size_t a = 0; a < s.dim(); ++a)
      for (std::size_t b = a + 1; b < s.dim(); ++b)
        more.push_back(commutator(as_matrix(s.basis().row(a)), as_matrix(s.basis().row(b))).flat());
    Subspace next = sum(s, Subspace::span(m * m, more));
    if (next == s) break;
    s = std::move(next);
  }

  const std::size_t d = s.dim();
  Vec c(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Vec w = s.coordinates(commutator(as_matrix(s.basis().row(a)), as_matrix(s.basis().row(b))).flat());
      for (std::size_t k = 0; k < d; ++k) {
        c[(a * d + b) * d + k] = w[k];
        c[(b * d + a) * d + k] = -w[k];
      }
    }
  return LieAlgebra::checked(d, std::move(c), std::move(name));
}

}  // namespace lietrans
