#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "divdiff/combinatorics.hpp"
#include "divdiff/func_spec.hpp"
#include "divdiff/polynomial.hpp"
#include "divdiff/scalar.hpp"

namespace divdiff {

template <FieldScalar Scalar>
struct KnotValue {
  Scalar knot;
  Scalar value;
};

/// Knot/value pairs with pairwise distinct knots. The divided-difference
/// order is size() - 1.
template <FieldScalar Scalar>
class KnotValueList {
 public:
  explicit KnotValueList(std::vector<KnotValue<Scalar>> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw std::invalid_argument("divided difference needs at least one knot");
    std::vector<Scalar> knots;
    knots.reserve(pairs_.size());
    for (const auto& kv : pairs_) knots.push_back(kv.knot);
    std::sort(knots.begin(), knots.end());
    const auto dup = std::adjacent_find(knots.begin(), knots.end());
    if (dup != knots.end()) {
      std::ostringstream msg;
      msg << "duplicate knot " << *dup;
      throw DomainError(msg.str());
    }
  }

  KnotValueList(const std::vector<Scalar>& knots, const std::vector<Scalar>& values)
      : KnotValueList(zip(knots, values)) {}

  std::size_t size() const { return pairs_.size(); }
  int order() const { return static_cast<int>(pairs_.size()) - 1; }
  const std::vector<KnotValue<Scalar>>& pairs() const { return pairs_; }
  const KnotValue<Scalar>& operator[](std::size_t i) const { return pairs_[i]; }

 private:
  static std::vector<KnotValue<Scalar>> zip(const std::vector<Scalar>& knots, const std::vector<Scalar>& values) {
    if (knots.size() != values.size()) {
      throw std::invalid_argument("knot and value lists differ in length");
    }
    std::vector<KnotValue<Scalar>> out;
    out.reserve(knots.size());
    for (std::size_t i = 0; i < knots.size(); ++i) out.push_back({knots[i], values[i]});
    return out;
  }

  std::vector<KnotValue<Scalar>> pairs_;
};

/// sum_k f(x_k) / Omega'(x_k) with Omega(x) = prod_i (x - x_i).
template <FieldScalar Scalar>
Scalar divided_difference_direct(const KnotValueList<Scalar>& kv) {
  Scalar sum(0);
  for (std::size_t k = 0; k < kv.size(); ++k) {
    Scalar omega_prime(1);
    for (std::size_t i = 0; i < kv.size(); ++i) {
      if (i != k) omega_prime = omega_prime * (kv[k].knot - kv[i].knot);
    }
    sum = sum + kv[k].value / omega_prime;
  }
  return sum;
}

/// Newton table: f[x_i..x_j] = (f[x_{i+1}..x_j] - f[x_i..x_{j-1}]) / (x_j - x_i).
/// Returns the full top diagonal f[x_0], f[x_0,x_1], ..., f[x_0..x_n].
template <FieldScalar Scalar>
std::vector<Scalar> newton_coefficients(const KnotValueList<Scalar>& kv) {
  const std::size_t m = kv.size();
  std::vector<Scalar> table(m, Scalar(0));
  for (std::size_t i = 0; i < m; ++i) table[i] = kv[i].value;
  std::vector<Scalar> top{table[0]};
  for (std::size_t width = 1; width < m; ++width) {
    for (std::size_t i = 0; i + width < m; ++i) {
      table[i] = (table[i + 1] - table[i]) / (kv[i + width].knot - kv[i].knot);
    }
    top.push_back(table[0]);
  }
  return top;
}

template <FieldScalar Scalar>
Scalar divided_difference_recursive(const KnotValueList<Scalar>& kv) {
  return newton_coefficients(kv).back();
}

/// Forward difference sum_{j=0}^n (-1)^(n-j) C(n,j) f(x + j h).
/// Order 0 is f(x).
template <FieldScalar Scalar, class Fn>
Scalar finite_difference(const Fn& f, const Scalar& x, const Scalar& h, int n) {
  if (n < 0) throw std::invalid_argument("finite difference order must be >= 0");
  Scalar sum(0);
  for (int j = 0; j <= n; ++j) {
    const Scalar weight = alternating_sign<Scalar>(n - j) * from_integer<Scalar>(binomial(n, j));
    sum = sum + weight * f(x + Scalar(j) * h);
  }
  return sum;
}

/// Applies the n-fold integral representation to p^{(n)} and evaluates at x.
template <FieldScalar Scalar>
Scalar finite_difference_via_integral(const Polynomial<Scalar>& p, const Scalar& x, const Scalar& h, int n) {
  if (n < 1) throw std::invalid_argument("integral representation needs order n >= 1");
  if (!(Scalar(0) < h)) throw std::invalid_argument("integral representation needs h > 0");
  Polynomial<Scalar> q = derivative(p, n);
  for (int layer = 0; layer < n; ++layer) q = shift_integral(q, h);
  return q(x);
}

/// Knots {k/n : 0 <= k <= n}.
template <FieldScalar Scalar>
std::vector<Scalar> equispaced_knots(int n) {
  if (n < 1) throw std::invalid_argument("equispaced knots need n >= 1");
  std::vector<Scalar> knots;
  for (int k = 0; k <= n; ++k) knots.push_back(Scalar(k) / Scalar(n));
  return knots;
}

// FuncSpec-level entry points.

struct FiniteDifferenceRequest {
  FiniteDifferenceRequest(FuncSpec f, Rational x, Rational h, int n);

  FuncSpec f;
  Rational x;
  Rational h;
  int n;
};

Rational finite_difference(const FiniteDifferenceRequest& req);

/// Divided difference of f at the knots 0, 1/n, ..., 1.
Rational equispaced_divided_difference(const FuncSpec& f, int n);

struct EquispacedIdentityCheck {
  Rational lhs;  ///< f[0, 1/n, ..., 1] via the Omega' formula
  Rational rhs;  ///< Delta_{1/n}^n f(0) / (n! (1/n)^n)
  bool equal;
};

/// Compares the equispaced divided difference with the scaled forward
/// difference through independent code paths.
EquispacedIdentityCheck check_equispaced_identity(const FuncSpec& f, int n);

}  // namespace divdiff
