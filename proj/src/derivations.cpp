#include "lietrans/derivations.hpp"

#include "lietrans/errors.hpp"
#include "lietrans/kernels.hpp"

namespace lietrans {

bool is_derivation(const LieAlgebra& g, const Mat& f) {
  const std::size_t n = g.dim();
  if (f.rows() != n || f.cols() != n) throw DimensionError("is_derivation: matrix shape mismatch");
  std::vector<Vec> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = f.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = f.apply(g.bracket_basis(i, j));
      const Vec rhs = g.bracket(images[i], unit_vector(n, j)) + g.bracket(unit_vector(n, i), images[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

Vec DerivationAlgebra::coordinates(const Mat& f) const { return space.coordinates(f.flat()); }

Mat DerivationAlgebra::realize(std::span<const Rat> coords) const {
  if (coords.size() != dim()) throw DimensionError("DerivationAlgebra::realize: coordinate length mismatch");
  const std::size_t n = base.dim();
  Mat f(n, n);
  for (std::size_t a = 0; a < dim(); ++a)
    if (!coords[a].is_zero()) f = f + coords[a] * realization[a];
  return f;
}

LinMap DerivationAlgebra::adjoint_embedding() const {
  const std::size_t n = base.dim();
  Mat m(dim(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec c = coordinates(base.ad_basis(i));
    for (std::size_t a = 0; a < dim(); ++a) m(a, i) = c[a];
  }
  return LinMap(base, algebra, std::move(m));
}

DerivationAlgebra derivation_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Subspace space = nullspace(kernels::parallel::leibniz_system(g.tensor(), n));
  const std::size_t d = space.dim();

  std::vector<Mat> real;
  real.reserve(d);
  for (std::size_t a = 0; a < d; ++a) {
    auto row = space.basis().row(a);
    real.push_back(Mat::from_flat(n, n, Vec(row.begin(), row.end())));
  }

  Vec c(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Vec w = space.coordinates(commutator(real[a], real[b]).flat());
      for (std::size_t k = 0; k < d; ++k) {
        c[(a * d + b) * d + k] = w[k];
        c[(b * d + a) * d + k] = -w[k];
      }
    }
  LieAlgebra alg = LieAlgebra::checked(d, std::move(c), g.name().empty() ? "" : "D(" + g.name() + ")");

  std::vector<Vec> inner;
  for (std::size_t i = 0; i < n; ++i) inner.push_back(space.coordinates(g.ad_basis(i).flat()));
  Subspace inner_space = Subspace::span(d, inner);

  return DerivationAlgebra{g, std::move(alg), std::move(real), std::move(space), std::move(inner_space)};
}

bool is_complete(const DerivationAlgebra& d) {
  return center(d.base).space().is_zero() && d.inner.dim() == d.dim();
}

bool is_complete(const LieAlgebra& g) {
  if (!center(g).space().is_zero()) return false;
  return is_complete(derivation_algebra(g));
}

Holomorph holomorph(const LieAlgebra& h) {
  DerivationAlgebra der = derivation_algebra(h);
  const std::size_t n = h.dim(), d = der.dim(), total = n + d;
  Vec c(total * total * total);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rat& { return c[(i * total + j) * total + k]; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) at(i, j, k) = h.c(i, j, k);
  // [(e_i, 0), (0, f_b)] = (-f_b(e_i), 0)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        at(i, n + b, k) = -der.realization[b](k, i);
        at(n + b, i, k) = der.realization[b](k, i);
      }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < d; ++k) at(n + a, n + b, n + k) = der.algebra.c(a, b, k);

  LieAlgebra alg = LieAlgebra::checked(total, std::move(c), h.name().empty() ? "" : "H(" + h.name() + ")");
  Mat eh(total, n), ed(total, d);
  for (std::size_t i = 0; i < n; ++i) eh(i, i) = 1;
  for (std::size_t a = 0; a < d; ++a) ed(n + a, a) = 1;
  LinMap embed_h(h, alg, std::move(eh));
  LinMap embed_d(der.algebra, alg, std::move(ed));
  return Holomorph{std::move(alg), std::move(embed_h), std::move(embed_d), std::move(der)};
}

TowerReport derivation_tower(const LieAlgebra& g, std::optional<std::size_t> max_steps) {
  if (!center(g).space().is_zero())
    throw PreconditionError("derivation_tower: algebra has nontrivial center");
  const std::size_t budget = max_steps.value_or(g.dim() * g.dim() + 1);

  TowerReport rep;
  rep.stages.push_back(g);
  for (;;) {
    const LieAlgebra& stage = rep.stages.back();
    DerivationAlgebra d = derivation_algebra(stage);
    if (d.inner.dim() == d.dim()) {
      rep.stabilized_at = rep.stages.size() - 1;
      break;
    }
    if (rep.embeddings.size() == budget) break;
    if (!center(d.algebra).space().is_zero())
      throw InvariantViolation("derivation_tower: derivation algebra of a centerless algebra has a center");
    rep.embeddings.push_back(d.adjoint_embedding());
    rep.stages.push_back(d.algebra);
  }
  return rep;
}

DerivedTowerCheck theorem_derived_check(const LieAlgebra& g) {
  if (!center(g).space().is_zero())
    throw PreconditionError("theorem_derived_check: algebra has nontrivial center");
  const DerivationAlgebra d1 = derivation_algebra(g);
  const DerivationAlgebra d2 = derivation_algebra(d1.algebra);

  DerivedTowerCheck out;
  out.dim_d = d1.dim();
  out.dim_d2 = d2.dim();
  out.d_complete = is_complete(d2);
  const Subspace image = compose(d2.adjoint_embedding(), d1.adjoint_embedding()).image();
  out.ideal_in_d2 = is_ideal(d2.algebra, image);
  return out;
}

bool is_characteristic(const LieAlgebra& g, const Subalgebra& h, const DerivationAlgebra& d) {
  if (!(d.base == g)) throw DimensionError("is_characteristic: derivation algebra belongs to another algebra");
  if (!is_ideal(g, h)) throw PreconditionError("is_characteristic: h is not an ideal of g");
  for (const Mat& f : d.realization)
    for (std::size_t b = 0; b < h.dim(); ++b)
      if (!h.space().contains(f.apply(h.space().basis().row(b)))) return false;
  return true;
}

bool is_characteristic(const LieAlgebra& g, const Subalgebra& h) {
  if (!is_ideal(g, h)) throw PreconditionError("is_characteristic: h is not an ideal of g");
  return is_characteristic(g, h, derivation_algebra(g));
}

bool commutator_with_inner_identity(const DerivationAlgebra& d) {
  const LieAlgebra& g = d.base;
  for (const Mat& f : d.realization)
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (commutator(f, g.ad_basis(i)) != g.ad(f.column(i))) return false;
  return true;
}

bool vanishing_on_inner_forces_zero(const LieAlgebra& g) {
  if (!center(g).space().is_zero())
    throw PreconditionError("vanishing_on_inner_forces_zero: algebra has nontrivial center");
  const DerivationAlgebra d1 = derivation_algebra(g);
  const DerivationAlgebra d2 = derivation_algebra(d1.algebra);
  const std::size_t n = g.dim(), d = d1.dim();

  std::vector<Vec> inner_coords;
  for (std::size_t i = 0; i < n; ++i) inner_coords.push_back(d1.coordinates(g.ad_basis(i)));

  // Column F of `restriction` lists F(ad_{e_1}), ..., F(ad_{e_n}).
  Mat restriction(n * d, d2.dim());
  for (std::size_t f = 0; f < d2.dim(); ++f)
    for (std::size_t i = 0; i < n; ++i) {
      const Vec v = d2.realization[f].apply(inner_coords[i]);
      for (std::size_t a = 0; a < d; ++a) restriction(i * d + a, f) = v[a];
    }
  return rank(restriction) == d2.dim();
}

}  // namespace lietrans
