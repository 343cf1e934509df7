#include "divdiff/grid_function.hpp"

#include <stdexcept>
#include <string>

namespace divdiff {

GridFunction::GridFunction(std::int64_t denominator, RationalVector values)
    : denominator_(denominator), values_(std::move(values)) {
  if (denominator_ < 1) throw std::invalid_argument("grid denominator must be >= 1");
  if (values_.size() != denominator_ + 1) {
    throw std::invalid_argument("grid function with L = " + std::to_string(denominator_) +
                                " needs " + std::to_string(denominator_ + 1) + " values");
  }
}

GridFunction GridFunction::zeros(std::int64_t denominator) {
  return GridFunction(denominator, RationalVector::Constant(denominator + 1, Rational(0)));
}

Rational GridFunction::operator()(const Rational& x) const {
  if (x < Rational(0) || x > Rational(1)) {
    throw DomainError("piecewise-linear function evaluated outside [0,1] at x = " + x.to_string());
  }
  const Rational scaled = x * Rational(denominator_);
  const Integer cell = scaled.floor();
  const auto k = static_cast<std::int64_t>(cell.get_si());
  if (k >= denominator_) return value(denominator_);
  const Rational t = scaled - Rational(cell);
  return value(k) + t * (value(k + 1) - value(k));
}

Rational GridFunction::sup_norm() const {
  Rational best(0);
  for (const Rational& v : values_) best = std::max(best, abs(v));
  return best;
}

Rational GridFunction::lipschitz_constant() const {
  Rational best(0);
  for (std::int64_t k = 0; k < denominator_; ++k) best = std::max(best, abs(value(k + 1) - value(k)));
  return best * Rational(denominator_);
}

}  // namespace divdiff
