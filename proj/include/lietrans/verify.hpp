#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lietrans/lie_algebra.hpp"

namespace lietrans::verify {

enum class Status { Pass, Fail, Skipped, Error };
std::string to_string(Status s);

struct CheckResult {
  int criterion = 0;    // acceptance criterion this instance feeds
  std::string suite;
  std::string group;    // e.g. the subalgebra h, or the hypothesis tag
  std::string id;       // human-readable instance description
  Status status = Status::Pass;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> results;  // canonical order, independent of scheduling

  std::size_t count(Status s) const;
  std::size_t count(int criterion, Status s) const;
  bool ok() const { return count(Status::Fail) == 0 && count(Status::Error) == 0; }
};

struct Options {
  std::uint64_t seed = 1;
  std::size_t random = 50;  // randomized instances for the radical suite
};

/// Solvable algebra spanned by the commutator closure of `generators` random
/// upper-triangular size x size matrices with entries in {-2, ..., 2}.
LieAlgebra random_solvable(std::mt19937_64& rng, std::size_t size, std::size_t generators, std::string name);

/// Centerless random solvable algebras of dimension at most max_dim; draws
/// until `count` are found. Deterministic in the seed.
std::vector<LieAlgebra> random_centerless(std::uint64_t seed, std::size_t count, std::size_t max_dim);

/// Mixed corpus: random solvable algebras, some summed with sl2 or so3.
std::vector<LieAlgebra> random_mixed(std::uint64_t seed, std::size_t count);

/// Subalgebras of g worth probing: tagged ones, algebras generated by single
/// basis vectors and pairs of them, and the characteristic series.
std::vector<Subspace> probe_subalgebras(const LieAlgebra& g, const std::vector<Subspace>& tagged = {});

std::vector<std::string> suite_names();  // perfect, complete, radical, forms, selfnorm

/// Throws std::invalid_argument for an unknown suite. "all" runs every suite.
SuiteReport run_suite(std::string_view suite, const Options& opts = {});

}  // namespace lietrans::verify
