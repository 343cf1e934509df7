#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include "divdiff/errors.hpp"

namespace divdiff {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator so that equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      q_ = static_cast<long>(value);
    } else {
      q_ = static_cast<unsigned long>(value);
    }
  }

  Rational(const Integer& value) : q_(value) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses `p/q` or an integer, with an optional leading sign on p.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Largest integer not exceeding the value.
  Integer floor() const;

  double to_double() const { return q_.get_d(); }

  /// `p` for integers, `p/q` otherwise.
  std::string to_string() const;

  /// Decimal rendering with 15 significant digits, display only.
  std::string to_decimal() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace divdiff

namespace Eigen {

template <>
struct NumTraits<divdiff::Rational> : GenericNumTraits<divdiff::Rational> {
  using Real = divdiff::Rational;
  using NonInteger = divdiff::Rational;
  using Literal = divdiff::Rational;
  using Nested = divdiff::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
