#pragma once

// Reference computations that share no solver code with the library. Used to
// cross-check derivation dimensions and subideal verdicts on small algebras.

#include <cstddef>
#include <vector>

#include "lietrans/lie_algebra.hpp"

namespace lietrans::oracle {

// dim D(g) as n^2 minus the rank of the Leibniz defects of the n^2 matrix
// units, over all ordered pairs (i, j). Elimination runs on raw mpq_class.
std::size_t derivation_dim(const LieAlgebra& g);

// Every bracket-closed subspace spanned by at most two vectors with
// coordinates in {-2, ..., 2}, plus g itself. Intended for dim(g) <= 3, where
// this covers every subalgebra up to the grid.
class SubidealGrid {
 public:
  explicit SubidealGrid(const LieAlgebra& g);

  const std::vector<Subspace>& subalgebras() const { return nodes_; }
  // h reaches g through a chain of grid subalgebras, each an ideal of the next.
  bool is_subideal(const Subspace& h) const;

 private:
  LieAlgebra g_;
  std::vector<Subspace> nodes_;
  std::vector<std::vector<std::size_t>> up_;  // up_[a]: nodes having a as a proper ideal
};

}  // namespace lietrans::oracle
