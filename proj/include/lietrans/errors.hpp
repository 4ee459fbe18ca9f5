#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lietrans {

// Operands live in incompatible ambient spaces or have mismatched shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for its inputs.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input. `where` names the line and/or field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// A structure tensor that violates antisymmetry or the Jacobi identity.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations that must agree did not. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lietrans
