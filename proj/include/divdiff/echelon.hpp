#pragma once

#include <Eigen/Core>
#include <vector>

#include "divdiff/scalar.hpp"

namespace divdiff {

template <FieldScalar Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <FieldScalar Scalar>
struct EchelonForm {
  Matrix<Scalar> reduced;             ///< rank x cols, reduced row echelon form
  std::vector<Eigen::Index> pivots;   ///< pivot column of each row of `reduced`

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Fraction-free (Bareiss) forward elimination followed by normalization and
/// back substitution. For integer input every intermediate of the forward
/// pass stays integral.
template <FieldScalar Scalar>
EchelonForm<Scalar> row_reduce(Matrix<Scalar> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Scalar previous(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot_row = r;
    while (pivot_row < rows && is_zero(m(pivot_row, c))) ++pivot_row;
    if (pivot_row == rows) continue;
    if (pivot_row != r) m.row(pivot_row).swap(m.row(r));
    const Scalar pivot = m(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const Scalar factor = m(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        const bool left_zero = is_zero(m(i, j));
        const bool right_zero = is_zero(factor) || is_zero(m(r, j));
        if (left_zero && right_zero) continue;
        m(i, j) = (pivot * m(i, j) - factor * m(r, j)) / previous;
      }
      m(i, c) = Scalar(0);
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }

  Matrix<Scalar> reduced = m.topRows(r);
  for (Eigen::Index i = r - 1; i >= 0; --i) {
    const Eigen::Index pc = pivots[static_cast<std::size_t>(i)];
    const Scalar pivot = reduced(i, pc);
    for (Eigen::Index j = pc; j < cols; ++j) {
      if (!is_zero(reduced(i, j))) reduced(i, j) = reduced(i, j) / pivot;
    }
    for (Eigen::Index k = 0; k < i; ++k) {
      const Scalar factor = reduced(k, pc);
      if (is_zero(factor)) continue;
      for (Eigen::Index j = pc; j < cols; ++j) {
        if (!is_zero(reduced(i, j))) reduced(k, j) = reduced(k, j) - factor * reduced(i, j);
      }
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

}  // namespace divdiff
