#pragma once

#include <stdexcept>

namespace divdiff {

/// Raised when the mathematics itself rules an input out: duplicate knots,
/// a pole of a rational function, division by zero, evaluation outside the
/// domain of a non-extended grid function.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, function specs, grid files).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace divdiff
