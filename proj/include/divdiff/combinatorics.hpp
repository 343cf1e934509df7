#pragma once

#include <cstdint>

#include "divdiff/rational.hpp"

namespace divdiff {

/// C(n, j) for 0 <= j <= n; throws std::invalid_argument otherwise.
Integer binomial(std::int64_t n, std::int64_t j);

Integer factorial(std::int64_t n);

/// lcm(1, 2, ..., n); throws std::overflow_error past 64 bits.
std::int64_t lcm_up_to(int n);

}  // namespace divdiff
