#pragma once

#include <optional>
#include <vector>

#include "divdiff/func_spec.hpp"

namespace divdiff {

struct CascadeCheck {
  int order;              ///< n; order 0 stands for p(0)
  Rational difference;    ///< Delta_{1/n}^n p(0)
};

struct CascadeResult {
  std::vector<CascadeCheck> checks;  ///< from order deg(p) down to 0
  std::optional<int> nonzero_order;  ///< largest order with a nonvanishing difference

  bool zero_polynomial() const { return !nonzero_order.has_value(); }
};

/// Runs the vanishing-difference hypothesis on a polynomial from the top
/// order down. The top difference equals a_n n! (1/n)^n, so a nonzero
/// polynomial always fails at order deg(p).
CascadeResult polynomial_cascade(const RationalPolynomial& p);

}  // namespace divdiff
