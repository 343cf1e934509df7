#include "divdiff/cascade.hpp"

#include <algorithm>

#include "divdiff/differences.hpp"

namespace divdiff {

CascadeResult polynomial_cascade(const RationalPolynomial& p) {
  CascadeResult out;
  const int top = std::max(p.degree(), 0);
  for (int n = top; n >= 0; --n) {
    Rational diff = n == 0 ? p(Rational(0))
                           : finite_difference(p, Rational(0), Rational(1) / Rational(n), n);
    if (!diff.is_zero() && !out.nonzero_order) out.nonzero_order = n;
    out.checks.push_back({n, std::move(diff)});
  }
  return out;
}

}  // namespace divdiff
