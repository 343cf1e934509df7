#include "divdiff/constraint_system.hpp"

#include <stdexcept>

#include "divdiff/combinatorics.hpp"
#include "divdiff/scalar.hpp"

namespace divdiff {

ConstraintSystem build_constraint_system(int max_order) {
  if (max_order < 1) throw std::invalid_argument("constraint system needs N >= 1");
  const std::int64_t L = lcm_up_to(max_order);
  RationalMatrix rows = RationalMatrix::Constant(max_order + 1, L + 1, Rational(0));
  rows(0, 0) = Rational(1);
  for (int n = 1; n <= max_order; ++n) {
    const std::int64_t stride = L / n;
    for (int j = 0; j <= n; ++j) {
      rows(n, j * stride) = alternating_sign<Rational>(n - j) * Rational(binomial(n, j));
    }
  }
  return {max_order, L, std::move(rows)};
}

RationalVector grid_samples(const FuncSpec& f, std::int64_t grid_denominator) {
  RationalVector out(grid_denominator + 1);
  for (std::int64_t k = 0; k <= grid_denominator; ++k) out(k) = f(Rational(k) / Rational(grid_denominator));
  return out;
}

}  // namespace divdiff
