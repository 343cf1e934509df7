#include "divdiff/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace divdiff {

BoundedSimplex::BoundedSimplex(const BoundedLinearProgram& lp) : structural_(lp.equalities.cols()) {
  const Eigen::Index m = lp.equalities.rows();
  if (lp.rhs.size() != m || lp.lower.size() != structural_ || lp.upper.size() != structural_) {
    throw std::invalid_argument("linear program dimensions disagree");
  }
  for (Eigen::Index j = 0; j < structural_; ++j) {
    if (lp.upper(j) < lp.lower(j)) throw std::invalid_argument("linear program has an empty box");
  }
  const Eigen::Index total = structural_ + m;

  // Structural variables start at their lower bounds; one artificial per row
  // absorbs the residual, signed so that it starts non-negative.
  values_ = RationalVector::Constant(total, Rational(0));
  values_.head(structural_) = lp.lower;
  const RationalVector residual = lp.rhs - lp.equalities * lp.lower;

  lower_ = RationalVector::Constant(total, Rational(0));
  upper_ = RationalVector::Constant(total, Rational(0));
  lower_.head(structural_) = lp.lower;
  upper_.head(structural_) = lp.upper;

  tableau_ = RationalMatrix::Constant(m, total, Rational(0));
  basic_.resize(static_cast<std::size_t>(m));
  is_basic_.assign(static_cast<std::size_t>(total), false);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Rational sign = residual(i).sign() < 0 ? Rational(-1) : Rational(1);
    tableau_.row(i).head(structural_) = sign * lp.equalities.row(i);
    tableau_(i, structural_ + i) = Rational(1);
    values_(structural_ + i) = abs(residual(i));
    upper_(structural_ + i) = abs(residual(i));
    basic_[static_cast<std::size_t>(i)] = structural_ + i;
    is_basic_[static_cast<std::size_t>(structural_ + i)] = true;
  }

  RationalVector phase_one = RationalVector::Constant(total, Rational(0));
  phase_one.tail(m).setConstant(Rational(-1));
  feasible_ = optimize(phase_one).is_zero();

  // Pin artificials at zero; fixed variables never enter again.
  upper_.tail(m).setConstant(Rational(0));
}

Rational BoundedSimplex::maximize(const RationalVector& objective) {
  if (!feasible_) throw std::logic_error("maximize() on an infeasible program");
  if (objective.size() != structural_) throw std::invalid_argument("objective has the wrong length");
  RationalVector cost = RationalVector::Constant(tableau_.cols(), Rational(0));
  cost.head(structural_) = objective;
  return optimize(cost);
}

void BoundedSimplex::pivot(Eigen::Index row, Eigen::Index col) {
  const Rational p = tableau_(row, col);
  for (Eigen::Index j = 0; j < tableau_.cols(); ++j) {
    if (!tableau_(row, j).is_zero()) tableau_(row, j) /= p;
  }
  for (Eigen::Index i = 0; i < tableau_.rows(); ++i) {
    if (i == row) continue;
    const Rational factor = tableau_(i, col);
    if (factor.is_zero()) continue;
    for (Eigen::Index j = 0; j < tableau_.cols(); ++j) {
      if (!tableau_(row, j).is_zero()) tableau_(i, j) -= factor * tableau_(row, j);
    }
  }
  is_basic_[static_cast<std::size_t>(basic_[static_cast<std::size_t>(row)])] = false;
  basic_[static_cast<std::size_t>(row)] = col;
  is_basic_[static_cast<std::size_t>(col)] = true;
  ++pivots_;
}

Rational BoundedSimplex::optimize(const RationalVector& cost) {
  const Eigen::Index m = tableau_.rows();
  const Eigen::Index total = tableau_.cols();

  // reduced[j] = cost[j] - sum_i cost[basic_i] * tableau(i, j)
  RationalVector reduced = cost;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Rational& cb = cost(basic_[static_cast<std::size_t>(i)]);
    if (cb.is_zero()) continue;
    for (Eigen::Index j = 0; j < total; ++j) {
      if (!tableau_(i, j).is_zero()) reduced(j) -= cb * tableau_(i, j);
    }
  }

  // Dantzig pricing; after a run of degenerate steps fall back to Bland's
  // rule, which cannot cycle, until the objective moves again.
  constexpr int kDegenerateLimit = 32;
  int degenerate_streak = 0;
  while (true) {
    const bool bland = degenerate_streak >= kDegenerateLimit;
    Eigen::Index entering = -1;
    for (Eigen::Index j = 0; j < total; ++j) {
      if (is_basic_[static_cast<std::size_t>(j)] || lower_(j) == upper_(j)) continue;
      const int s = reduced(j).sign();
      if ((s > 0 && values_(j) < upper_(j)) || (s < 0 && values_(j) > lower_(j))) {
        if (entering < 0 || abs(reduced(j)) > abs(reduced(entering))) entering = j;
        if (bland) break;
      }
    }
    if (entering < 0) break;

    const bool increase = reduced(entering).sign() > 0;
    // Bound flip of the entering variable itself.
    Rational step = upper_(entering) - lower_(entering);
    std::optional<Eigen::Index> leaving_row;
    for (Eigen::Index i = 0; i < m; ++i) {
      const Rational& a = tableau_(i, entering);
      if (a.is_zero()) continue;
      // basic value moves by -a * delta, delta = +/- t
      const bool basic_decreases = (a.sign() > 0) == increase;
      const Eigen::Index b = basic_[static_cast<std::size_t>(i)];
      const Rational limit =
          basic_decreases ? (values_(b) - lower_(b)) / abs(a) : (upper_(b) - values_(b)) / abs(a);
      if (limit < step ||
          (limit == step && leaving_row && b < basic_[static_cast<std::size_t>(*leaving_row)])) {
        step = limit;
        leaving_row = i;
      }
    }

    const Rational delta = increase ? step : -step;
    degenerate_streak = delta.is_zero() ? degenerate_streak + 1 : 0;
    if (!delta.is_zero()) {
      values_(entering) += delta;
      for (Eigen::Index i = 0; i < m; ++i) {
        const Rational& a = tableau_(i, entering);
        if (!a.is_zero()) values_(basic_[static_cast<std::size_t>(i)]) -= a * delta;
      }
    }
    if (!leaving_row) continue;  // bound flip

    const Eigen::Index row = *leaving_row;
    const Eigen::Index leaving = basic_[static_cast<std::size_t>(row)];
    // Snap the leaving variable exactly onto the bound it reached.
    values_(leaving) = (values_(leaving) - lower_(leaving)).is_zero() ? lower_(leaving) : upper_(leaving);
    pivot(row, entering);
    const Rational factor = reduced(entering);
    for (Eigen::Index j = 0; j < total; ++j) {
      if (!tableau_(row, j).is_zero()) reduced(j) -= factor * tableau_(row, j);
    }
  }

  Rational objective(0);
  for (Eigen::Index j = 0; j < total; ++j) {
    if (!cost(j).is_zero()) objective += cost(j) * values_(j);
  }
  return objective;
}

}  // namespace divdiff
