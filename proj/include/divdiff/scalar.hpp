#pragma once

#include <cstdint>
#include <type_traits>

#include "divdiff/rational.hpp"

namespace divdiff {

/// Minimal field requirements of the templated numeric layer.
template <class Scalar>
concept FieldScalar = requires(Scalar a, Scalar b) {
  { a + b } -> std::convertible_to<Scalar>;
  { a - b } -> std::convertible_to<Scalar>;
  { a * b } -> std::convertible_to<Scalar>;
  { a / b } -> std::convertible_to<Scalar>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  Scalar(0);
};

template <FieldScalar Scalar>
Scalar from_integer(const Integer& value) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return static_cast<Scalar>(value.get_d());
  } else {
    return Scalar(value);
  }
}

template <FieldScalar Scalar>
bool is_zero(const Scalar& value) {
  return value == Scalar(0);
}

/// (-1)^k as a scalar; valid for negative k too.
template <FieldScalar Scalar>
Scalar alternating_sign(std::int64_t k) {
  return (k % 2 == 0) ? Scalar(1) : Scalar(-1);
}

}  // namespace divdiff
