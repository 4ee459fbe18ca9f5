#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lietrans/matrix.hpp"
#include "lietrans/subspace.hpp"

namespace lietrans {

/// Outcome of checking the Lie axioms on a structure tensor.
struct ValidationReport {
  enum class Kind { Valid, Antisymmetry, Jacobi };
  Kind kind = Kind::Valid;
  std::array<std::size_t, 3> triple{};  // first violating basis triple

  bool ok() const { return kind == Kind::Valid; }
  std::string message() const;
};

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k, stored densely with both (i, j) and
/// (j, i) populated.
///
/// Copies share the immutable tensor, so algebras are passed by value.
class LieAlgebra {
 public:
  LieAlgebra();

  /// No axiom checks. Use validate() or checked() for untrusted tensors.
  static LieAlgebra from_tensor(std::size_t dim, Vec tensor, std::string name = {});
  /// Throws ValidationError naming the first violating triple.
  static LieAlgebra checked(std::size_t dim, Vec tensor, std::string name = {});

  /// Sets brackets pairwise, filling in (j, i) by antisymmetry.
  class Builder {
   public:
    explicit Builder(std::size_t dim, std::string name = {});
    Builder& set(std::size_t i, std::size_t j, std::size_t k, const Rat& v);
    // [e_i, e_j] = v
    Builder& set(std::size_t i, std::size_t j, const Vec& v);
    LieAlgebra build() const;

   private:
    std::size_t dim_;
    std::string name_;
    Vec c_;
  };

  std::size_t dim() const { return data_->dim; }
  const std::string& name() const { return data_->name; }
  LieAlgebra renamed(std::string name) const;

  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return data_->c[(i * dim() + j) * dim() + k];
  }
  std::span<const Rat> tensor() const { return data_->c; }

  Vec bracket(std::span<const Rat> x, std::span<const Rat> y) const;
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  /// Matrix of y -> [x, y].
  Mat ad(std::span<const Rat> x) const;
  Mat ad_basis(std::size_t i) const;

  bool is_abelian() const;

  /// Same dimension and identical structure tensor; names are ignored.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  struct Data {
    std::size_t dim = 0;
    Vec c;
    std::string name;
  };
  explicit LieAlgebra(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

ValidationReport validate(const LieAlgebra& g);

/// Linear map between algebras; matrix is target.dim() x source.dim().
class LinMap {
 public:
  LinMap(LieAlgebra source, LieAlgebra target, Mat matrix);

  const LieAlgebra& source() const { return source_; }
  const LieAlgebra& target() const { return target_; }
  const Mat& matrix() const { return matrix_; }

  Vec apply(std::span<const Rat> x) const { return matrix_.apply(x); }
  Subspace image() const;
  Subspace image(const Subspace& u) const;
  Subspace kernel() const;
  bool is_injective() const;

 private:
  LieAlgebra source_;
  LieAlgebra target_;
  Mat matrix_;
};

LinMap compose(const LinMap& outer, const LinMap& inner);

/// Symmetric bilinear form on an algebra.
class SymForm {
 public:
  /// Throws std::invalid_argument when the matrix is not symmetric.
  SymForm(LieAlgebra ambient, Mat matrix);

  const LieAlgebra& ambient() const { return ambient_; }
  const Mat& matrix() const { return matrix_; }
  Rat operator()(std::span<const Rat> x, std::span<const Rat> y) const;

 private:
  LieAlgebra ambient_;
  Mat matrix_;
};

/// A bracket-closed subspace of a parent algebra.
class Subalgebra {
 public:
  /// Throws PreconditionError when the space is not closed under brackets.
  Subalgebra(LieAlgebra parent, Subspace space);

  static Subalgebra full(const LieAlgebra& g);
  static Subalgebra zero(const LieAlgebra& g);

  const LieAlgebra& parent() const { return parent_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  /// Intrinsic algebra in the canonical basis of space().
  LieAlgebra as_algebra(std::string name = {}) const;
  /// Inclusion as_algebra() -> parent.
  LinMap inclusion() const;

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) {
    return a.parent_ == b.parent_ && a.space_ == b.space_;
  }

 private:
  LieAlgebra parent_;
  Subspace space_;
};

Vec bracket(const LieAlgebra& g, std::span<const Rat> x, std::span<const Rat> y);
LinMap adjoint_matrix(const LieAlgebra& g, std::span<const Rat> x);

/// Span of [u, v] over the bases of U and V.
Subspace bracket_spaces(const LieAlgebra& g, const Subspace& u, const Subspace& v);
bool is_bracket_closed(const LieAlgebra& g, const Subspace& s);
/// Smallest subalgebra containing the given vectors.
Subalgebra generated_subalgebra(const LieAlgebra& g, const std::vector<Vec>& generators);

Subalgebra derived_subalgebra(const Subalgebra& h);
Subalgebra derived_subalgebra(const LieAlgebra& g);
bool is_perfect(const Subalgebra& h);
bool is_perfect(const LieAlgebra& g);

Subalgebra center(const LieAlgebra& g);
/// {x in g : [x, h] = 0}
Subalgebra centralizer(const LieAlgebra& g, const Subspace& h);
Subalgebra centralizer(const LieAlgebra& g, const Subalgebra& h);
/// {x in g : [x, h] in h}
Subalgebra normalizer(const LieAlgebra& g, const Subalgebra& h);

/// [outer, inner] is contained in inner (inner need not be inside outer).
bool normalizes(const LieAlgebra& g, const Subspace& outer, const Subspace& inner);
bool is_ideal(const LieAlgebra& g, const Subalgebra& h);
bool is_ideal(const LieAlgebra& g, const Subspace& h);

SymForm killing_form(const LieAlgebra& g);

/// Killing-orthogonal complement of [g, g], self-checked: the result must be
/// a solvable ideal with nondegenerate Killing form on the quotient.
Subalgebra radical(const LieAlgebra& g);
/// Radical of h as an algebra in its own right, in parent coordinates.
Subspace radical(const Subalgebra& h);
bool is_semisimple(const LieAlgebra& g);

/// Derived series g, [g,g], ... until it stabilizes.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// Lower central series g, [g,g], [g,[g,g]], ... until it stabilizes.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

struct Quotient {
  LieAlgebra algebra;
  LinMap projection;
};
/// Quotient on the coordinates complementary to the ideal's pivot columns.
/// Throws PreconditionError when `ideal` is not an ideal.
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

struct DirectSum {
  LieAlgebra algebra;
  LinMap embed_first;
  LinMap embed_second;
};
DirectSum direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string name = {});

bool is_homomorphism(const LinMap& f);
bool is_automorphism(const LinMap& f);

/// Same algebra written in a new basis; column i of `basis` is the i-th new
/// basis vector in old coordinates. Throws PreconditionError if singular.
LieAlgebra change_basis(const LieAlgebra& g, const Mat& basis, std::string name = {});

/// Lie subalgebra of gl(n) generated by square matrices under the commutator,
/// with the canonical basis of its span of flattened matrices.
LieAlgebra linear_lie_algebra(const std::vector<Mat>& generators, std::string name = {});

}  // namespace lietrans
