#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divdiff/func_spec.hpp"

namespace divdiff {

/// Mean of Delta_{ih}^n f(x) over i = 1..N for f extended by zero, compared
/// with its limit (-1)^n f(x).
struct AveragingProbeResult {
  int order;
  Rational point;
  Rational step;
  std::int64_t samples;

  Rational average;
  Rational target;     ///< (-1)^n f(x)
  Rational residual;   ///< average - target
  /// (1/N) sum_{j>=1} (-1)^(n-j) C(n,j) sum_{i<=N, x+jih<=1} f(x+jih), recomputed independently.
  Rational boundary_sum;
  bool residual_matches_boundary;

  Rational sup_bound;       ///< M, bound on |f| over the touched points in [0,1]
  Rational bound;           ///< (1/N) sum_j C(n,j) floor((1-x)/(jh)) M
  std::int64_t cutoff;      ///< N past which residual * N no longer changes
};

/// `f` is extended by zero regardless of its own flag. Needs 0 <= x < 1, h > 0, n >= 0, N >= 1.
AveragingProbeResult averaging_probe(const FuncSpec& f, const Rational& x, const Rational& h, int n,
                                     std::int64_t N);

/// sum_{i=1}^N g(x+jih) - sum_{i=1}^N g(y+jih)  versus
/// sum_{i=1}^{j'} g(x+jih) - sum_{i=N+1}^{N+j'} g(x+jih), with y = x + n! h, j' = n!/j.
struct TelescopeCheck {
  Rational shifted_point;   ///< y
  std::int64_t cofactor;    ///< j'
  Rational lhs;
  Rational rhs;
  bool equal;
};

TelescopeCheck telescope_shift_identity(const FuncSpec& g, const Rational& x, int n, int j, const Rational& h,
                                        std::int64_t N);

struct WalkthroughTerm {
  int j;
  std::int64_t cofactor;   ///< j' = n!/j
  Rational weight;         ///< (-1)^(n-j) C(n,j)
  Rational window_x;       ///< sum_{i=1}^N r(x+jih)
  Rational window_y;       ///< sum_{i=1}^N r(y+jih)
  Rational head_x;         ///< sum_{i=1}^{j'} r(x+jih)
  Rational tail_x;         ///< sum_{i=N+1}^{N+j'} r(x+jih)
  Rational literal_block_x;  ///< sum_{i=max(1,N-j'+1)}^{N} r(x+jih), index range as printed
  Rational literal_block_y;  ///< sum_{i=1}^{j'} r(y+ijh)
  bool telescopes;         ///< window_x - window_y == head_x - tail_x
  Rational weighted_interpolant;  ///< (-1)^n (j'/N) Q_n(x)
};

/// Every finite-N quantity of the averaging argument for f - Q_n, where
/// r = f - Q_n with both extended by zero outside [0,1].
struct ProofWalkthrough {
  int order;
  Rational point;
  Rational step;
  std::int64_t samples;
  Rational shifted_point;   ///< y = x + n! h
  Integer factorial;

  RationalPolynomial interpolant;
  Rational leading_coefficient;
  bool degree_reduced;

  Rational f_at_x;
  Rational interpolant_at_x;
  Rational r_at_x;
  Rational r_at_y;

  Rational average_x;        ///< (1/N) sum_i Delta_{ih}^n r(x)
  Rational average_y;        ///< (1/N) sum_i Delta_{ih}^n r(y)
  Rational first_term;       ///< average_x - average_y
  Rational second_term;      ///< (1/N) sum_j weight_j (window_x - window_y)
  Rational second_term_bound;
  std::vector<WalkthroughTerm> terms;

  Rational decomposition_lhs;   ///< (-1)^n (r(x) - r(y))
  bool decomposition_holds;     ///< decomposition_lhs == first_term - second_term

  Rational averaging_target;    ///< (-1)^n f(x)
  Rational averaging_residual;  ///< first_term - averaging_target
  Rational averaging_gap;       ///< decomposition_lhs - averaging_target, the part that does not decay with N
  Rational averaging_bound;     ///< |averaging_gap| + second_term_bound

  std::int64_t closing_cofactor;   ///< j' used in the closing identity (j = n)
  Rational closing_interpolant_term;  ///< (-1)^n (j'/N) Q_n(x)
  Rational telescope_residual;     ///< second_term - closing_interpolant_term
  Rational closing_lhs;            ///< (-1)^n (f(x) - Q_n(x))
  Rational closing_rhs;            ///< (-1)^n f(x) - closing_interpolant_term
  Rational closing_residual;       ///< closing_lhs - (first_term - second_term); equals (-1)^n r(y)
  Rational closing_gap;            ///< closing_lhs - closing_rhs; tends to -(-1)^n Q_n(x), not to 0, unless Q_n(x) = 0

  std::vector<std::string> notes;
};

ProofWalkthrough proof_walkthrough(const FuncSpec& f, int n, const Rational& h, std::int64_t N, const Rational& x);

}  // namespace divdiff
