#include <gtest/gtest.h>

#include "divdiff/constraint_system.hpp"
#include "divdiff/min_lipschitz.hpp"
#include "divdiff/nullspace.hpp"
#include "divdiff/simplex.hpp"
#include "test_support.hpp"

namespace divdiff {
namespace {

RationalVector vec(std::initializer_list<Rational> xs) {
  RationalVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

TEST(BoundedSimplex, SlackForm) {
  BoundedLinearProgram lp;
  lp.equalities.resize(2, 4);
  lp.equalities << Rational(1), Rational(1), Rational(1), Rational(0), Rational(1), Rational(3), Rational(0),
      Rational(1);
  lp.rhs = vec({4, 6});
  lp.lower = vec({0, 0, 0, 0});
  lp.upper = vec({10, 10, 100, 100});
  BoundedSimplex s(lp);
  ASSERT_TRUE(s.feasible());
  EXPECT_EQ(s.maximize(vec({3, 2, 0, 0})), Rational(12));
  // Warm start with a different objective: max y gives y = 2, x = 0.
  EXPECT_EQ(s.maximize(vec({0, 1, 0, 0})), Rational(2));
  const RationalVector x = s.solution();
  EXPECT_EQ(lp.equalities * x, lp.rhs);
}

TEST(BoundedSimplex, NegativeRightHandSideAndBoundFlip) {
  BoundedLinearProgram lp;
  lp.equalities.resize(1, 2);
  lp.equalities << Rational(1), Rational(-1);
  lp.rhs = vec({-1});
  lp.lower = vec({0, 0});
  lp.upper = vec({3, 3});
  BoundedSimplex s(lp);
  ASSERT_TRUE(s.feasible());
  EXPECT_EQ(s.maximize(vec({1, 0})), Rational(2));
  EXPECT_EQ(s.maximize(vec({-1, 0})), Rational(0));
}

TEST(BoundedSimplex, DetectsInfeasibility) {
  BoundedLinearProgram lp;
  lp.equalities.resize(1, 2);
  lp.equalities << Rational(1), Rational(1);
  lp.rhs = vec({5});
  lp.lower = vec({0, 0});
  lp.upper = vec({1, 1});
  BoundedSimplex s(lp);
  EXPECT_FALSE(s.feasible());
  EXPECT_THROW(s.maximize(vec({1, 1})), std::logic_error);
}

// One equality over three boxed variables: every vertex has two variables at
// a bound and the third solved from the equality.
TEST(BoundedSimplex, MatchesVertexEnumerationOracle) {
  testing::RandomRationals gen(61);
  for (int trial = 0; trial < 100; ++trial) {
    RationalVector a(3), c(3);
    for (int i = 0; i < 3; ++i) {
      a(i) = gen.nonzero(4, 3);
      c(i) = gen.next(4, 3);
    }
    const Rational b = gen.next(3, 2);
    const Rational lo(-2), hi(2);

    std::optional<Rational> best;
    for (int free = 0; free < 3; ++free) {
      for (int mask = 0; mask < 4; ++mask) {
        RationalVector x(3);
        Rational rest = b;
        int bit = 0;
        for (int i = 0; i < 3; ++i) {
          if (i == free) continue;
          x(i) = (mask >> bit++) & 1 ? hi : lo;
          rest -= a(i) * x(i);
        }
        x(free) = rest / a(free);
        if (x(free) < lo || x(free) > hi) continue;
        const Rational value = c.dot(x);
        if (!best || value > *best) best = value;
      }
    }

    BoundedLinearProgram lp;
    lp.equalities = a.transpose();
    lp.rhs = vec({b});
    lp.lower = RationalVector::Constant(3, lo);
    lp.upper = RationalVector::Constant(3, hi);
    BoundedSimplex s(lp);
    ASSERT_EQ(s.feasible(), best.has_value());
    if (best) ASSERT_EQ(s.maximize(c), *best);
  }
}

TEST(MinLipschitz, InfeasibleWhenKernelIsTrivial) {
  EXPECT_TRUE(min_lipschitz_unit_norm(1).infeasible());
  EXPECT_TRUE(min_lipschitz_unit_norm(2).infeasible());
}

void expect_valid_witness(const MinLipschitzResult& r) {
  ASSERT_FALSE(r.infeasible());
  const auto sys = build_constraint_system(r.max_order);
  const RationalVector image = sys.rows * r.witness->values();
  for (const Rational& v : image) ASSERT_TRUE(v.is_zero());
  EXPECT_EQ(r.witness->sup_norm(), Rational(1));
  EXPECT_EQ(r.witness->value(*r.peak), Rational(1));
  EXPECT_EQ(r.witness->lipschitz_constant(), *r.value);
}

TEST(MinLipschitz, OrderThreeIsSix) {
  const auto r = min_lipschitz_unit_norm(3);
  EXPECT_EQ(*r.value, Rational(6));
  expect_valid_witness(r);
}

// Grid search over combinations of the kernel basis; every candidate is an
// upper bound, so the search can never beat the true minimum.
TEST(MinLipschitz, OrderThreeAgreesWithBasisGridSearch) {
  const auto ns = nullspace(build_constraint_system(3));
  const auto basis = ns.basis();
  ASSERT_EQ(basis.size(), 3u);
  std::optional<Rational> best;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c) {
        const RationalVector v = Rational(a) * basis[0].values() + Rational(b) * basis[1].values() +
                                 Rational(c) * basis[2].values();
        const GridFunction g(6, v);
        const Rational norm = g.sup_norm();
        if (norm.is_zero()) continue;
        const Rational lip = g.lipschitz_constant() / norm;
        if (!best || lip < *best) best = lip;
      }
  ASSERT_TRUE(best);
  EXPECT_EQ(*best, Rational(6));
  EXPECT_EQ(*min_lipschitz_unit_norm(3).value, *best);
}

TEST(MinLipschitz, LargerOrdersProduceValidWitnesses) {
  const auto three = min_lipschitz_unit_norm(3);
  for (int N = 4; N <= 6; ++N) {
    const auto r = min_lipschitz_unit_norm(N);
    expect_valid_witness(r);
    EXPECT_GE(*r.value, *three.value) << "N=" << N;
    EXPECT_EQ(r.programs_solved, static_cast<std::size_t>(r.grid_denominator));
  }
}

}  // namespace
}  // namespace divdiff
