#include "divdiff/differences.hpp"

namespace divdiff {

FiniteDifferenceRequest::FiniteDifferenceRequest(FuncSpec f_, Rational x_, Rational h_, int n_)
    : f(std::move(f_)), x(std::move(x_)), h(std::move(h_)), n(n_) {
  if (h.sign() <= 0) throw std::invalid_argument("finite difference step h must be > 0");
  if (n < 0) throw std::invalid_argument("finite difference order must be >= 0");
}

Rational finite_difference(const FiniteDifferenceRequest& req) {
  return finite_difference(req.f, req.x, req.h, req.n);
}

Rational equispaced_divided_difference(const FuncSpec& f, int n) {
  const auto knots = equispaced_knots<Rational>(n);
  std::vector<Rational> values;
  values.reserve(knots.size());
  for (const Rational& k : knots) values.push_back(f(k));
  return divided_difference_direct(KnotValueList<Rational>(knots, values));
}

EquispacedIdentityCheck check_equispaced_identity(const FuncSpec& f, int n) {
  if (n < 1) throw std::invalid_argument("identity check needs n >= 1");
  const Rational step = Rational(1) / Rational(n);
  Rational lhs = equispaced_divided_difference(f, n);
  const Rational scale = Rational(factorial(n)) * pow(step, static_cast<unsigned>(n));
  Rational rhs = finite_difference(f, Rational(0), step, n) / scale;
  const bool equal = lhs == rhs;
  return {std::move(lhs), std::move(rhs), equal};
}

}  // namespace divdiff
