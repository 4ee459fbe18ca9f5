#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lietrans/kernels.hpp"
#include "lietrans/matrix.hpp"

namespace lietrans {

using kernels::RrefResult;

/// Reduced row-echelon form of `m` and its pivot columns.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// A subspace of Q^n held by its canonical basis: the nonzero rows of a
/// reduced row-echelon matrix. Two subspaces are equal exactly when their
/// basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  // Row space of `rows`.
  static Subspace row_space(const Mat& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rat> v) const;
  bool contains(const Subspace& other) const;

  /// Remainder of v after removing its component along the basis (zero at
  /// every pivot column). Zero exactly when v lies in the subspace.
  Vec reduce(std::span<const Rat> v) const;

  /// Coordinates of v with respect to basis(). Throws if v is not contained.
  Vec coordinates(std::span<const Rat> v) const;

  /// Rows spanning {w : w . u = 0 for all u in this subspace}.
  Mat annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  std::string str() const;

 private:
  Subspace(std::size_t ambient, Mat basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace nullspace(const Mat& m);

/// Inverse of a square matrix; throws PreconditionError when singular.
Mat inverse(const Mat& m);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// {v : u^T B v = 0 for every u in U}.
Subspace orthogonal_complement(const Mat& form, const Subspace& u);

/// Gram matrix of `form` restricted to the basis of U.
Mat restrict_form(const Mat& form, const Subspace& u);

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t dim() const { return n_plus + n_minus + n_zero; }
  bool nondegenerate() const { return n_zero == 0; }
  bool positive_definite() const { return n_minus == 0 && n_zero == 0; }
  bool negative_definite() const { return n_plus == 0 && n_zero == 0; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
  std::string str() const;
};

/// Sylvester inertia of a symmetric form restricted to U, by exact symmetric
/// congruence elimination. Throws DimensionError on shape mismatch and
/// std::invalid_argument when the form is not symmetric.
Inertia inertia(const Mat& form, const Subspace& u);
Inertia inertia(const Mat& form);

}  // namespace lietrans
