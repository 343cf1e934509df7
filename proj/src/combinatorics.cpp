#include "divdiff/combinatorics.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace divdiff {

Integer binomial(std::int64_t n, std::int64_t j) {
  if (n < 0 || j < 0 || j > n) {
    throw std::invalid_argument("binomial(" + std::to_string(n) + ", " + std::to_string(j) +
                                ") needs 0 <= j <= n");
  }
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  return out;
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

std::int64_t lcm_up_to(int n) {
  if (n < 1) throw std::invalid_argument("lcm_up_to needs n >= 1");
  std::int64_t acc = 1;
  for (std::int64_t k = 2; k <= n; ++k) {
    const std::int64_t step = k / std::gcd(acc, k);
    if (acc > std::numeric_limits<std::int64_t>::max() / step) {
      throw std::overflow_error("lcm(1.." + std::to_string(n) + ") overflows 64 bits");
    }
    acc *= step;
  }
  return acc;
}

}  // namespace divdiff
