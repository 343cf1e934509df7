#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "divdiff/scalar.hpp"

namespace divdiff {

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroPolynomialDegree = std::numeric_limits<int>::min();

/// Dense polynomial in the monomial basis, coefficients in ascending degree.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
template <FieldScalar Scalar>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
  }

  Polynomial(std::initializer_list<Scalar> coefficients)
      : Polynomial(std::vector<Scalar>(coefficients)) {}

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  /// c * x^k
  static Polynomial monomial(int k, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1, Scalar(0));
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
  }

  /// (x - r_0)(x - r_1)...(x - r_m)
  static Polynomial from_roots(std::span<const Scalar> roots) {
    Polynomial out = constant(Scalar(1));
    for (const Scalar& r : roots) out = out * Polynomial{-r, Scalar(1)};
    return out;
  }

  bool is_zero() const { return coeffs_.empty(); }

  int degree() const {
    return coeffs_.empty() ? kZeroPolynomialDegree : static_cast<int>(coeffs_.size()) - 1;
  }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Coefficient of x^k, zero beyond the degree.
  Scalar coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Scalar(0);
  }

  /// Horner evaluation.
  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    std::vector<Scalar> out(coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] = out[k] + a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] = out[k] + b.coeffs_[k];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (divdiff::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    std::vector<Scalar> out(p.coeffs_);
    for (auto& c : out) c = s * c;
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && divdiff::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

template <FieldScalar Scalar>
Scalar poly_eval(const Polynomial<Scalar>& p, const Scalar& x) {
  return p(x);
}

/// k-th derivative; the zero polynomial once k exceeds the degree.
template <FieldScalar Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p, int k = 1) {
  if (k < 0) throw std::invalid_argument("derivative order must be non-negative");
  const auto& c = p.coefficients();
  if (static_cast<std::size_t>(k) >= c.size()) return {};
  std::vector<Scalar> out(c.size() - static_cast<std::size_t>(k), Scalar(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    // falling factorial (i+k)(i+k-1)...(i+1)
    Integer factor = 1;
    for (std::size_t m = i + 1; m <= i + static_cast<std::size_t>(k); ++m) factor *= static_cast<unsigned long>(m);
    out[i] = from_integer<Scalar>(factor) * c[i + static_cast<std::size_t>(k)];
  }
  return Polynomial<Scalar>(std::move(out));
}

/// Antiderivative vanishing at 0.
template <FieldScalar Scalar>
Polynomial<Scalar> antiderivative(const Polynomial<Scalar>& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return {};
  std::vector<Scalar> out(c.size() + 1, Scalar(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i + 1] = c[i] / from_integer<Scalar>(Integer(static_cast<unsigned long>(i + 1)));
  }
  return Polynomial<Scalar>(std::move(out));
}

/// p(x + h) as a polynomial in x.
template <FieldScalar Scalar>
Polynomial<Scalar> shift(const Polynomial<Scalar>& p, const Scalar& h) {
  const Polynomial<Scalar> x_plus_h{h, Scalar(1)};
  Polynomial<Scalar> acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x_plus_h + Polynomial<Scalar>::constant(*it);
  return acc;
}

/// q(x) = integral of p(x + t) for t in [0, h], i.e. P(x + h) - P(x).
template <FieldScalar Scalar>
Polynomial<Scalar> shift_integral(const Polynomial<Scalar>& p, const Scalar& h) {
  if (!(Scalar(0) < h)) throw std::invalid_argument("shift integral needs h > 0");
  const Polynomial<Scalar> primitive = antiderivative(p);
  return shift(primitive, h) - primitive;
}

}  // namespace divdiff
