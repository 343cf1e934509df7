#include "divdiff/proof_probes.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "divdiff/combinatorics.hpp"
#include "divdiff/differences.hpp"
#include "divdiff/interpolation.hpp"

namespace divdiff {

namespace {

using Evaluator = std::function<Rational(const Rational&)>;

/// Number of i >= 1 with t + i*stride <= 1 (t >= 0 assumed).
std::int64_t window_count(const Rational& t, const Rational& stride) {
  if (t > Rational(1)) return 0;
  return static_cast<std::int64_t>(((Rational(1) - t) / stride).floor().get_si());
}

/// sum_{i=first}^{last} g(t + i * stride)
Rational shifted_sum(const Evaluator& g, const Rational& t, const Rational& stride, std::int64_t first,
                     std::int64_t last) {
  Rational sum(0);
  for (std::int64_t i = first; i <= last; ++i) sum += g(t + Rational(i) * stride);
  return sum;
}

/// max |g| over t + i*j*h, j = 1..n, i = 1..window_count.
Rational touched_sup(const Evaluator& g, const Rational& t, const Rational& h, int n) {
  Rational best(0);
  for (int j = 1; j <= n; ++j) {
    const Rational stride = Rational(j) * h;
    const std::int64_t count = window_count(t, stride);
    for (std::int64_t i = 1; i <= count; ++i) best = std::max(best, abs(g(t + Rational(i) * stride)));
  }
  return best;
}

/// (1/N) sum_{i=1}^N Delta_{ih}^n g(t)
Rational mean_difference(const Evaluator& g, const Rational& t, const Rational& h, int n, std::int64_t N) {
  Rational sum(0);
  for (std::int64_t i = 1; i <= N; ++i) sum += finite_difference(g, t, Rational(i) * h, n);
  return sum / Rational(N);
}

std::int64_t checked_factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("order n must lie in 0..20 for n! bookkeeping");
  return static_cast<std::int64_t>(factorial(n).get_si());
}

void require_window(const Rational& x, const Rational& h, std::int64_t N) {
  if (x < Rational(0) || x >= Rational(1)) throw std::invalid_argument("probe point x must lie in [0, 1)");
  if (h.sign() <= 0) throw std::invalid_argument("step h must be > 0");
  if (N < 1) throw std::invalid_argument("sample count N must be >= 1");
}

}  // namespace

AveragingProbeResult averaging_probe(const FuncSpec& f, const Rational& x, const Rational& h, int n,
                                     std::int64_t N) {
  require_window(x, h, N);
  if (n < 0) throw std::invalid_argument("order n must be >= 0");
  const FuncSpec extended = f.with_zero_extension();
  const Evaluator g = [&](const Rational& t) { return extended(t); };

  AveragingProbeResult out{n, x, h, N, {}, {}, {}, {}, false, {}, {}, 0};
  out.average = mean_difference(g, x, h, n, N);
  out.target = alternating_sign<Rational>(n) * extended(x);
  out.residual = out.average - out.target;

  Rational boundary(0);
  Rational envelope(0);
  for (int j = 1; j <= n; ++j) {
    const Rational stride = Rational(j) * h;
    const std::int64_t count = window_count(x, stride);
    const Integer c = binomial(n, j);
    boundary += alternating_sign<Rational>(n - j) * Rational(c) * shifted_sum(g, x, stride, 1, std::min(N, count));
    envelope += Rational(c) * Rational(count);
    out.cutoff = std::max(out.cutoff, count);
  }
  out.boundary_sum = boundary / Rational(N);
  out.residual_matches_boundary = out.boundary_sum == out.residual;

  if (const auto* grid = std::get_if<GridFunction>(&f.variant())) {
    out.sup_bound = grid->sup_norm();
  } else {
    out.sup_bound = touched_sup(g, x, h, n);
  }
  out.bound = envelope * out.sup_bound / Rational(N);
  return out;
}

TelescopeCheck telescope_shift_identity(const FuncSpec& g, const Rational& x, int n, int j, const Rational& h,
                                        std::int64_t N) {
  if (j < 1 || j > n) throw std::invalid_argument("telescope index j must lie in 1..n");
  if (h.sign() <= 0) throw std::invalid_argument("step h must be > 0");
  if (N < 1) throw std::invalid_argument("sample count N must be >= 1");
  const std::int64_t fact = checked_factorial(n);
  if (fact % j != 0) throw std::invalid_argument("j does not divide n!");
  const std::int64_t cofactor = fact / j;

  const Evaluator eval = [&](const Rational& t) { return g(t); };
  const Rational stride = Rational(j) * h;
  const Rational y = x + Rational(fact) * h;

  Rational lhs = shifted_sum(eval, x, stride, 1, N) - shifted_sum(eval, y, stride, 1, N);
  Rational rhs = shifted_sum(eval, x, stride, 1, cofactor) - shifted_sum(eval, x, stride, N + 1, N + cofactor);
  const bool equal = lhs == rhs;
  return {y, cofactor, std::move(lhs), std::move(rhs), equal};
}

ProofWalkthrough proof_walkthrough(const FuncSpec& f, int n, const Rational& h, std::int64_t N, const Rational& x) {
  require_window(x, h, N);
  if (n < 1) throw std::invalid_argument("walkthrough needs order n >= 1");
  const std::int64_t fact = checked_factorial(n);
  const FuncSpec extended = f.with_zero_extension();

  ProofWalkthrough w;
  w.order = n;
  w.point = x;
  w.step = h;
  w.samples = N;
  w.factorial = Integer(static_cast<long>(fact));
  w.shifted_point = x + Rational(fact) * h;
  const Rational& y = w.shifted_point;

  const auto sample = EquispacedSample<Rational>::of(extended, n);
  w.interpolant = lagrange_equispaced(sample);
  w.leading_coefficient = leading_coefficient(w.interpolant, n);
  w.degree_reduced = w.leading_coefficient.is_zero();

  const RationalPolynomial& q = w.interpolant;
  const Evaluator r = [&](const Rational& t) {
    if (t < Rational(0) || t > Rational(1)) return Rational(0);
    return extended(t) - q(t);
  };

  const Rational sign = alternating_sign<Rational>(n);
  w.f_at_x = extended(x);
  w.interpolant_at_x = q(x);
  w.r_at_x = r(x);
  w.r_at_y = r(y);

  w.average_x = mean_difference(r, x, h, n, N);
  w.average_y = mean_difference(r, y, h, n, N);
  w.first_term = w.average_x - w.average_y;

  const Rational sup_r = std::max(touched_sup(r, x, h, n), touched_sup(r, y, h, n));
  Rational second(0);
  Rational envelope(0);
  for (int j = 1; j <= n; ++j) {
    WalkthroughTerm t;
    t.j = j;
    t.cofactor = fact / j;
    t.weight = alternating_sign<Rational>(n - j) * Rational(binomial(n, j));
    const Rational stride = Rational(j) * h;
    t.window_x = shifted_sum(r, x, stride, 1, N);
    t.window_y = shifted_sum(r, y, stride, 1, N);
    t.head_x = shifted_sum(r, x, stride, 1, t.cofactor);
    t.tail_x = shifted_sum(r, x, stride, N + 1, N + t.cofactor);
    t.literal_block_x = shifted_sum(r, x, stride, std::max<std::int64_t>(1, N - t.cofactor + 1), N);
    t.literal_block_y = shifted_sum(r, y, stride, 1, t.cofactor);
    t.telescopes = (t.window_x - t.window_y) == (t.head_x - t.tail_x);
    t.weighted_interpolant = sign * Rational(t.cofactor) / Rational(N) * w.interpolant_at_x;
    second += t.weight * (t.window_x - t.window_y);
    envelope += Rational(binomial(n, j)) * Rational(window_count(x, stride) + window_count(y, stride));
    w.terms.push_back(std::move(t));
  }
  w.second_term = second / Rational(N);
  w.second_term_bound = envelope * sup_r / Rational(N);

  w.decomposition_lhs = sign * (w.r_at_x - w.r_at_y);
  w.decomposition_holds = w.decomposition_lhs == w.first_term - w.second_term;

  w.averaging_target = sign * w.f_at_x;
  w.averaging_residual = w.first_term - w.averaging_target;
  w.averaging_gap = w.decomposition_lhs - w.averaging_target;
  w.averaging_bound = abs(w.averaging_gap) + w.second_term_bound;

  w.closing_cofactor = fact / n;
  w.closing_interpolant_term = sign * Rational(w.closing_cofactor) / Rational(N) * w.interpolant_at_x;
  w.telescope_residual = w.second_term - w.closing_interpolant_term;
  w.closing_lhs = sign * (w.f_at_x - w.interpolant_at_x);
  w.closing_rhs = sign * w.f_at_x - w.closing_interpolant_term;
  w.closing_residual = w.closing_lhs - (w.first_term - w.second_term);
  w.closing_gap = w.closing_lhs - w.closing_rhs;

  w.notes = {
      "inner sums are evaluated at the shifted arguments x+jih and y+jih",
      "f and Q_n are both extended by zero outside [0,1]",
      "the closing identity uses j' = n!/n; per-j weighted interpolant terms are listed in terms[]",
      "finite-N quantities only: no limit in N is claimed",
  };
  if (!w.decomposition_holds) w.notes.emplace_back("WARNING: exact decomposition failed");
  return w;
}

}  // namespace divdiff
