#include "divdiff/nullspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "divdiff/echelon.hpp"

namespace divdiff {

NullspaceReport::NullspaceReport(int max_order, std::int64_t grid_denominator, RationalMatrix reduced,
                                 std::vector<std::int64_t> pivot_columns)
    : max_order_(max_order),
      grid_denominator_(grid_denominator),
      reduced_(std::move(reduced)),
      pivot_columns_(std::move(pivot_columns)) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(grid_denominator_ + 1), false);
  for (auto c : pivot_columns_) is_pivot[static_cast<std::size_t>(c)] = true;
  for (std::int64_t c = 0; c <= grid_denominator_; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_columns_.push_back(c);
  }
  // A pivot column is forced to zero exactly when its reduced row is a unit vector.
  for (std::size_t r = 0; r < pivot_columns_.size(); ++r) {
    bool unit = true;
    for (auto c : free_columns_) {
      if (!reduced_(static_cast<Eigen::Index>(r), c).is_zero()) {
        unit = false;
        break;
      }
    }
    if (unit) forced_zero_points_.push_back(pivot_columns_[r]);
  }
  std::sort(forced_zero_points_.begin(), forced_zero_points_.end());
}

GridFunction NullspaceReport::basis_vector(std::size_t i) const {
  if (i >= free_columns_.size()) throw std::out_of_range("null-space basis index out of range");
  const std::int64_t free = free_columns_[i];
  RationalVector v = RationalVector::Constant(grid_denominator_ + 1, Rational(0));
  v(free) = Rational(1);
  for (std::size_t r = 0; r < pivot_columns_.size(); ++r) {
    v(pivot_columns_[r]) = -reduced_(static_cast<Eigen::Index>(r), free);
  }
  return GridFunction(grid_denominator_, std::move(v));
}

std::vector<GridFunction> NullspaceReport::basis() const {
  std::vector<GridFunction> out;
  out.reserve(free_columns_.size());
  for (std::size_t i = 0; i < free_columns_.size(); ++i) out.push_back(basis_vector(i));
  return out;
}

NullspaceReport nullspace(const ConstraintSystem& system) {
  auto echelon = row_reduce<Rational>(system.rows);
  std::vector<std::int64_t> pivots(echelon.pivots.begin(), echelon.pivots.end());
  return NullspaceReport(system.max_order, system.grid_denominator, std::move(echelon.reduced),
                         std::move(pivots));
}

}  // namespace divdiff
