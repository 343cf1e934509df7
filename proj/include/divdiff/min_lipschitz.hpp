#pragma once

#include <cstdint>
#include <optional>

#include "divdiff/grid_function.hpp"
#include "divdiff/nullspace.hpp"

namespace divdiff {

struct MinLipschitzResult {
  int max_order;
  std::int64_t grid_denominator;
  std::optional<Rational> value;         ///< empty when the kernel is trivial (infeasible)
  std::optional<GridFunction> witness;   ///< kernel element with sup-norm 1 attaining `value`
  std::optional<std::int64_t> peak;      ///< grid index where the witness equals 1
  std::size_t programs_solved = 0;
  std::size_t pivots = 0;

  bool infeasible() const { return !value.has_value(); }
};

/// Smallest Lipschitz constant of a piecewise-linear kernel element with
/// sup-norm exactly 1.
///
/// One linear program per candidate peak k: with increments u_i = f((i+1)/L) - f(i/L)
/// boxed in [-1, 1] and f(0) = 0 built in, maximize f(k/L) subject to the kernel
/// rows. Dividing by the best peak value gives a unit-norm witness whose
/// Lipschitz constant L / max_k f(k/L) is minimal over the pinned family.
MinLipschitzResult min_lipschitz_unit_norm(int max_order);

}  // namespace divdiff
