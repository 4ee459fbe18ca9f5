#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lietrans/lie_algebra.hpp"

namespace lietrans::cli {

// Exit codes.
inline constexpr int kOk = 0;         // every check passed (a "false" verdict is still a pass)
inline constexpr int kFailed = 1;     // some check failed or hit an internal error
inline constexpr int kBadInput = 2;   // malformed input or an unmet precondition

// Line separating the human report from the JSON document that follows it.
inline constexpr std::string_view kMachineSeparator = "--- machine-readable ---";

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "file.json" or "catalog:NAME".
LieAlgebra load_source(std::string_view src);

// Semicolon-separated vectors of comma-separated rationals, e.g. "1,0,0;0,0,1".
std::vector<Vec> parse_basis_spec(std::string_view spec, std::size_t dim);

}  // namespace lietrans::cli
