#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lietrans/lie_algebra.hpp"

namespace lietrans {

/// Leibniz rule f[x, y] = [f x, y] + [x, f y] on every basis pair.
bool is_derivation(const LieAlgebra& g, const Mat& f);

/// D(g) together with its realization as matrices acting on g.
///
/// The basis of D(g) is the canonical basis of the Leibniz solution space in
/// gl(g), flattened row-major. Abstract coordinates of a derivation are its
/// entries at the pivot positions of that basis.
struct DerivationAlgebra {
  LieAlgebra base;
  LieAlgebra algebra;            // abstract structure constants of D(base)
  std::vector<Mat> realization;  // basis derivation i as a dim x dim matrix
  Subspace space;                // solution space inside Q^(dim^2)
  Subspace inner;                // span of ad_x, in D(base) coordinates

  std::size_t dim() const { return realization.size(); }
  /// Abstract coordinates of a derivation given as a matrix on base.
  Vec coordinates(const Mat& f) const;
  /// Matrix on base of the derivation with the given abstract coordinates.
  Mat realize(std::span<const Rat> coords) const;
  /// ad: base -> D(base), as a LinMap in abstract coordinates.
  LinMap adjoint_embedding() const;
};

DerivationAlgebra derivation_algebra(const LieAlgebra& g);

/// Trivial center and every derivation inner.
bool is_complete(const LieAlgebra& g);
bool is_complete(const DerivationAlgebra& d);

/// The semidirect product h x| D(h) with bracket
/// [(X, f), (Y, g)] = ([X, Y] + f(Y) - g(X), [f, g]).
/// Basis: the basis of h followed by the basis of D(h).
struct Holomorph {
  LieAlgebra algebra;
  LinMap embed_base;         // X -> (X, 0)
  LinMap embed_derivations;  // f -> (0, f)
  DerivationAlgebra derivations;
};

Holomorph holomorph(const LieAlgebra& h);

/// g, D(g), D^2(g), ... with each stage embedded in the next by ad.
struct TowerReport {
  std::vector<LieAlgebra> stages;
  std::vector<LinMap> embeddings;          // stages[i] -> stages[i + 1]
  std::optional<std::size_t> stabilized_at;  // first complete stage, if reached
};

/// Throws PreconditionError when g has nontrivial center. Default budget is
/// dim(g)^2 + 1 steps.
TowerReport derivation_tower(const LieAlgebra& g, std::optional<std::size_t> max_steps = std::nullopt);

/// Compares "D(g) is complete" with "g is an ideal of D^2(g)" for centerless g.
struct DerivedTowerCheck {
  bool d_complete = false;        // lhs
  bool ideal_in_d2 = false;       // rhs
  std::size_t dim_d = 0;
  std::size_t dim_d2 = 0;
  bool consistent() const { return d_complete == ideal_in_d2; }
};
DerivedTowerCheck theorem_derived_check(const LieAlgebra& g);

/// Every basis derivation of g maps h into h. Throws PreconditionError when
/// h is not an ideal of g.
bool is_characteristic(const LieAlgebra& g, const Subalgebra& h);
bool is_characteristic(const LieAlgebra& g, const Subalgebra& h, const DerivationAlgebra& d);

/// [f, ad_X] = ad_{f(X)} as matrices, for every basis derivation f and basis X.
bool commutator_with_inner_identity(const DerivationAlgebra& d);

/// For centerless g: the only derivation of D(g) vanishing on every ad_X is 0,
/// i.e. F -> (F(ad_{e_1}), ..., F(ad_{e_n})) is injective on D^2(g).
bool vanishing_on_inner_forces_zero(const LieAlgebra& g);

}  // namespace lietrans
