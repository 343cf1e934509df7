#pragma once

#include <cstdint>

#include "divdiff/func_spec.hpp"
#include "divdiff/rational.hpp"

namespace divdiff {

/// "f(0) = 0 and Delta_{1/n}^n f(0) = 0 for n = 1..N" written over the grid
/// values f(k/L), k = 0..L, with L = lcm(1..N). Row 0 is f(0) = 0; row n
/// holds (-1)^(n-j) C(n,j) at column j L / n.
struct ConstraintSystem {
  int max_order;
  std::int64_t grid_denominator;
  RationalMatrix rows;
};

ConstraintSystem build_constraint_system(int max_order);

/// f(k/L) for k = 0..L.
RationalVector grid_samples(const FuncSpec& f, std::int64_t grid_denominator);

}  // namespace divdiff
