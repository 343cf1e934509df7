#pragma once

#include <vector>

#include "divdiff/rational.hpp"

namespace divdiff {

/// max c^T x  subject to  A x = b,  lower <= x <= upper  (all bounds finite).
struct BoundedLinearProgram {
  RationalMatrix equalities;
  RationalVector rhs;
  RationalVector lower;
  RationalVector upper;
};

/// Exact bounded-variable primal simplex on a dense tableau, Bland's rule
/// throughout. Phase 1 runs in the constructor; each call to maximize()
/// warm-starts from the basis the previous call ended on.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const BoundedLinearProgram& lp);

  bool feasible() const { return feasible_; }

  /// Optimal objective value for `objective` (length = structural variables).
  /// Requires feasible().
  Rational maximize(const RationalVector& objective);

  /// Current values of the structural variables.
  RationalVector solution() const { return values_.head(structural_); }

  std::size_t pivot_count() const { return pivots_; }

 private:
  Rational optimize(const RationalVector& cost);
  void pivot(Eigen::Index row, Eigen::Index col);

  Eigen::Index structural_;
  RationalMatrix tableau_;            // B^{-1} [A | D]
  std::vector<Eigen::Index> basic_;   // basic variable of each row
  std::vector<bool> is_basic_;
  RationalVector lower_;
  RationalVector upper_;
  RationalVector values_;
  bool feasible_ = false;
  std::size_t pivots_ = 0;
};

}  // namespace divdiff
