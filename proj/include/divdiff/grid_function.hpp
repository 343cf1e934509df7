#pragma once

#include <cstdint>

#include "divdiff/rational.hpp"

namespace divdiff {

/// Values of a function on the grid {k/L : 0 <= k <= L}, read as the
/// piecewise-linear function through those nodes.
class GridFunction {
 public:
  GridFunction(std::int64_t denominator, RationalVector values);

  /// All-zero function on the grid with denominator L.
  static GridFunction zeros(std::int64_t denominator);

  std::int64_t denominator() const { return denominator_; }
  const RationalVector& values() const { return values_; }
  const Rational& value(std::int64_t k) const { return values_(static_cast<Eigen::Index>(k)); }

  /// Piecewise-linear evaluation on [0, 1]; DomainError outside.
  Rational operator()(const Rational& x) const;

  /// max_k |f(k/L)|, which is the exact sup-norm of the interpolant.
  Rational sup_norm() const;

  /// L * max_k |f((k+1)/L) - f(k/L)|, the exact Lipschitz constant of the interpolant.
  Rational lipschitz_constant() const;

  friend bool operator==(const GridFunction& a, const GridFunction& b) {
    return a.denominator_ == b.denominator_ && a.values_ == b.values_;
  }

 private:
  std::int64_t denominator_;
  RationalVector values_;
};

}  // namespace divdiff
