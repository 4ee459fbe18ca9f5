#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lietrans/lie_algebra.hpp"

namespace lietrans::catalog {

// Dimensions and flags every entry is expected to reproduce.
struct Facts {
  std::size_t dim = 0;
  std::size_t center = 0;
  std::size_t derived = 0;
  std::size_t radical = 0;
  std::size_t derivations = 0;
  bool perfect = false;
  bool complete = false;
  bool semisimple = false;

  friend bool operator==(const Facts&, const Facts&) = default;
  std::string str() const;
};

// Recomputes every field of Facts from scratch.
Facts compute_facts(const LieAlgebra& g);

template <class T>
using Tagged = std::vector<std::pair<std::string, T>>;

struct Entry {
  std::string name;
  LieAlgebra algebra;
  Tagged<Subspace> subspaces;
  Tagged<SymForm> forms;
  Tagged<LinMap> maps;  // endomorphisms of `algebra`, e.g. Cartan involutions
  Facts expected;       // frozen goldens

  // Throw std::out_of_range for unknown tags.
  const Subspace& subspace(std::string_view tag) const;
  const SymForm& form(std::string_view tag) const;
  const LinMap& map(std::string_view tag) const;
};

// Accepts every name from list() plus abelian(N) and upper_triangular(N) for
// any N >= 1. Throws std::invalid_argument for unknown names.
Entry get(std::string_view name);
std::vector<std::string> list();

// Builders used by get(); exposed for tests and corpus generation.
LieAlgebra abelian(std::size_t n);
LieAlgebra heisenberg3();
LieAlgebra aff1();
LieAlgebra sl2();
LieAlgebra so3();
LieAlgebra gl(std::size_t n);
LieAlgebra upper_triangular(std::size_t n);
LieAlgebra sl2_rad2();

// Structure-constant documents:
//   {"dim": 3, "name": "heisenberg3",
//    "brackets": [{"i": 0, "j": 1, "k": 2, "v": "1"}]}
// Only i < j is allowed; omitted entries are zero. Unknown fields are errors.
LieAlgebra parse(std::string_view text);
std::string serialize(const LieAlgebra& g);

LieAlgebra load(const std::filesystem::path& path);
void save(const LieAlgebra& g, const std::filesystem::path& path);

}  // namespace lietrans::catalog
