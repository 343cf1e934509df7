#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "divdiff/differences.hpp"
#include "divdiff/polynomial.hpp"

namespace divdiff {

/// Values f(k/n) for k = 0..n.
template <FieldScalar Scalar>
class EquispacedSample {
 public:
  EquispacedSample(int n, std::vector<Scalar> values) : n_(n), values_(std::move(values)) {
    if (n_ < 0) throw std::invalid_argument("equispaced sample needs n >= 0");
    if (values_.size() != static_cast<std::size_t>(n_) + 1) {
      throw std::invalid_argument("equispaced sample of order " + std::to_string(n_) + " needs " +
                                  std::to_string(n_ + 1) + " values");
    }
  }

  template <class Fn>
  static EquispacedSample of(const Fn& f, int n) {
    std::vector<Scalar> values;
    for (int k = 0; k <= n; ++k) values.push_back(f(n == 0 ? Scalar(0) : Scalar(k) / Scalar(n)));
    return EquispacedSample(n, std::move(values));
  }

  int order() const { return n_; }
  const std::vector<Scalar>& values() const { return values_; }

  Scalar knot(int k) const { return n_ == 0 ? Scalar(0) : Scalar(k) / Scalar(n_); }

 private:
  int n_;
  std::vector<Scalar> values_;
};

/// Interpolating polynomial of formal degree <= n through (k/n, values[k]),
/// built from the Newton form and expanded to monomial coefficients.
template <FieldScalar Scalar>
Polynomial<Scalar> lagrange_equispaced(const EquispacedSample<Scalar>& s) {
  const int n = s.order();
  std::vector<Scalar> knots;
  for (int k = 0; k <= n; ++k) knots.push_back(s.knot(k));
  const auto coeffs = newton_coefficients(KnotValueList<Scalar>(knots, s.values()));
  Polynomial<Scalar> q = Polynomial<Scalar>::constant(coeffs[static_cast<std::size_t>(n)]);
  for (int k = n - 1; k >= 0; --k) {
    q = q * Polynomial<Scalar>{-knots[static_cast<std::size_t>(k)], Scalar(1)} +
        Polynomial<Scalar>::constant(coeffs[static_cast<std::size_t>(k)]);
  }
  return q;
}

/// Coefficient of x^n in q; throws when q has degree above n.
template <FieldScalar Scalar>
Scalar leading_coefficient(const Polynomial<Scalar>& q, int n) {
  if (q.degree() > n) {
    throw std::invalid_argument("polynomial of degree " + std::to_string(q.degree()) +
                                " exceeds formal order " + std::to_string(n));
  }
  return q.coefficient(static_cast<std::size_t>(n));
}

/// True when the order-n interpolant drops to degree n-1 or less.
template <FieldScalar Scalar>
bool degree_reduced(const EquispacedSample<Scalar>& s) {
  if (s.order() < 1) throw std::invalid_argument("degree reduction is defined for n >= 1");
  return is_zero(leading_coefficient(lagrange_equispaced(s), s.order()));
}

}  // namespace divdiff
