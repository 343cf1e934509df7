#pragma once

#include <cstdint>
#include <vector>

#include "divdiff/constraint_system.hpp"
#include "divdiff/grid_function.hpp"

namespace divdiff {

/// Kernel of a constraint system, kept in reduced row echelon form. Basis
/// vectors are materialized on request since there are up to L of them,
/// each of length L + 1.
class NullspaceReport {
 public:
  NullspaceReport(int max_order, std::int64_t grid_denominator, RationalMatrix reduced,
                  std::vector<std::int64_t> pivot_columns);

  int max_order() const { return max_order_; }
  std::int64_t grid_denominator() const { return grid_denominator_; }
  std::int64_t rank() const { return static_cast<std::int64_t>(pivot_columns_.size()); }
  std::int64_t dimension() const { return static_cast<std::int64_t>(free_columns_.size()); }

  const RationalMatrix& reduced() const { return reduced_; }
  const std::vector<std::int64_t>& pivot_columns() const { return pivot_columns_; }
  const std::vector<std::int64_t>& free_columns() const { return free_columns_; }

  /// Grid indices k where every kernel element vanishes.
  const std::vector<std::int64_t>& forced_zero_points() const { return forced_zero_points_; }

  /// Kernel element with value 1 at the i-th free column and 0 at the others.
  GridFunction basis_vector(std::size_t i) const;
  std::vector<GridFunction> basis() const;

 private:
  int max_order_;
  std::int64_t grid_denominator_;
  RationalMatrix reduced_;
  std::vector<std::int64_t> pivot_columns_;
  std::vector<std::int64_t> free_columns_;
  std::vector<std::int64_t> forced_zero_points_;
};

NullspaceReport nullspace(const ConstraintSystem& system);

}  // namespace divdiff
