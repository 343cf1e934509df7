#include "divdiff/min_lipschitz.hpp"

#include "divdiff/constraint_system.hpp"
#include "divdiff/simplex.hpp"

namespace divdiff {

namespace {

/// Rewrites rows over f_0..f_L as rows over increments u_0..u_{L-1} with
/// f_0 = 0: the coefficient of u_i is the suffix sum of the row beyond i.
RationalMatrix increment_rows(const RationalMatrix& rows) {
  const Eigen::Index L = rows.cols() - 1;
  RationalMatrix out = RationalMatrix::Constant(rows.rows(), L, Rational(0));
  Eigen::Index used = 0;
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    Rational suffix(0);
    bool nonzero = false;
    for (Eigen::Index i = L - 1; i >= 0; --i) {
      suffix += rows(r, i + 1);
      out(used, i) = suffix;
      nonzero = nonzero || !suffix.is_zero();
    }
    if (nonzero) ++used;
  }
  return out.topRows(used);
}

}  // namespace

MinLipschitzResult min_lipschitz_unit_norm(int max_order) {
  const ConstraintSystem system = build_constraint_system(max_order);
  const std::int64_t L = system.grid_denominator;
  MinLipschitzResult out{max_order, L, std::nullopt, std::nullopt, std::nullopt, 0};
  if (nullspace(system).dimension() == 0) return out;

  BoundedLinearProgram lp;
  lp.equalities = increment_rows(system.rows);
  lp.rhs = RationalVector::Constant(lp.equalities.rows(), Rational(0));
  lp.lower = RationalVector::Constant(L, Rational(-1));
  lp.upper = RationalVector::Constant(L, Rational(1));
  BoundedSimplex simplex(lp);  // u = 0 is feasible, so phase 1 always succeeds

  Rational best(0);
  RationalVector best_increments;
  std::int64_t best_peak = 0;
  RationalVector objective = RationalVector::Constant(L, Rational(0));
  for (std::int64_t k = 1; k <= L; ++k) {
    objective(k - 1) = Rational(1);  // f(k/L) = u_0 + ... + u_{k-1}
    const Rational peak = simplex.maximize(objective);
    ++out.programs_solved;
    if (peak > best) {
      best = peak;
      best_increments = simplex.solution();
      best_peak = k;
    }
  }

  out.pivots = simplex.pivot_count();
  RationalVector values = RationalVector::Constant(L + 1, Rational(0));
  for (std::int64_t i = 0; i < L; ++i) values(i + 1) = values(i) + best_increments(i) / best;
  GridFunction witness(L, std::move(values));
  out.value = witness.lipschitz_constant();
  out.witness = std::move(witness);
  out.peak = best_peak;
  return out;
}

}  // namespace divdiff
