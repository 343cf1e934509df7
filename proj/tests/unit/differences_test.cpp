#include <gtest/gtest.h>

#include <algorithm>

#include "divdiff/differences.hpp"
#include "divdiff/func_spec_io.hpp"
#include "test_support.hpp"

namespace divdiff {
namespace {

Rational q(const char* s) { return Rational::parse(s); }

KnotValueList<Rational> sample(const RationalPolynomial& p, const std::vector<Rational>& knots) {
  std::vector<Rational> values;
  for (const auto& k : knots) values.push_back(p(k));
  return KnotValueList<Rational>(knots, values);
}

TEST(DividedDifferenceDirect, Examples) {
  EXPECT_EQ(divided_difference_direct(sample(RationalPolynomial::monomial(2), {0, q("1/2"), 1})), Rational(1));
  EXPECT_EQ(divided_difference_direct(sample(RationalPolynomial{0, -1, 1}, {0, 1})), Rational(0));
  const KnotValueList<Rational> two({q("1/3"), q("2")}, {q("5"), q("-1")});
  EXPECT_EQ(divided_difference_direct(two), (q("-1") - q("5")) / (q("2") - q("1/3")));
}

TEST(DividedDifferenceRecursive, Examples) {
  EXPECT_EQ(divided_difference_recursive(KnotValueList<Rational>({q("2/7")}, {q("-5/3")})), q("-5/3"));
  EXPECT_EQ(divided_difference_recursive(sample(RationalPolynomial::monomial(3), {0, q("1/3"), q("2/3"), 1})),
            Rational(1));
}

TEST(DividedDifference, DuplicateKnotsNameTheKnot) {
  try {
    KnotValueList<Rational>({0, q("1/2"), q("2/4")}, {1, 2, 3});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("1/2"), std::string::npos);
  }
  EXPECT_THROW(KnotValueList<Rational>({0, 1}, {1}), std::invalid_argument);
}

TEST(DividedDifferenceProperty, DirectMatchesRecursive) {
  testing::RandomRationals gen(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto count = static_cast<std::size_t>(gen.integer(1, 11));
    const auto knots = gen.distinct(count);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < count; ++i) values.push_back(gen.next());
    const KnotValueList<Rational> kv(knots, values);
    ASSERT_EQ(divided_difference_direct(kv), divided_difference_recursive(kv));
  }
}

TEST(DividedDifferenceProperty, PermutationSymmetry) {
  testing::RandomRationals gen(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto count = static_cast<std::size_t>(gen.integer(1, 9));
    std::vector<KnotValue<Rational>> pairs;
    for (const auto& k : gen.distinct(count)) pairs.push_back({k, gen.next()});
    const Rational reference = divided_difference_direct(KnotValueList<Rational>(pairs));
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
      std::shuffle(pairs.begin(), pairs.end(), gen.engine());
      ASSERT_EQ(divided_difference_direct(KnotValueList<Rational>(pairs)), reference);
    }
  }
}

TEST(DividedDifferenceProperty, AnnihilatesLowDegreeAndNormalizesMonomial) {
  testing::RandomRationals gen(33);
  for (int n = 1; n <= 10; ++n) {
    const auto knots = gen.distinct(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) {
      ASSERT_EQ(divided_difference_direct(sample(RationalPolynomial::monomial(k), knots)), Rational(0));
    }
    ASSERT_EQ(divided_difference_direct(sample(RationalPolynomial::monomial(n), knots)), Rational(1));
  }
}

TEST(FiniteDifference, Examples) {
  const FuncSpec square = FuncSpec::polynomial(RationalPolynomial::monomial(2));
  EXPECT_EQ(finite_difference(FiniteDifferenceRequest(square, 0, q("1/2"), 1)), q("1/4"));
  EXPECT_EQ(finite_difference(FiniteDifferenceRequest(square, 0, q("1/2"), 2)), q("1/2"));
  EXPECT_EQ(finite_difference(FiniteDifferenceRequest(square, q("3/5"), q("1/7"), 3)), Rational(0));
  EXPECT_EQ(finite_difference(FiniteDifferenceRequest(square, q("3/5"), q("1/7"), 0)), q("9/25"));
  EXPECT_THROW(FiniteDifferenceRequest(square, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(FiniteDifferenceRequest(square, 0, 1, -1), std::invalid_argument);
}

TEST(FiniteDifference, PoleIsReported) {
  const FuncSpec f = parse_func_spec("ratfun:1;-1/2,1");
  EXPECT_THROW(finite_difference(FiniteDifferenceRequest(f, 0, q("1/4"), 2)), DomainError);
}

TEST(FiniteDifference, SignParityMatchesPlusConvention) {
  // (-1)^(n-j) == (-1)^(n+j) for all integers
  for (int n = -6; n <= 12; ++n) {
    for (int j = -6; j <= 12; ++j) {
      ASSERT_EQ(alternating_sign<Rational>(n - j), alternating_sign<Rational>(n + j));
    }
  }
}

TEST(FiniteDifferenceProperty, MonomialOfMatchingOrder) {
  testing::RandomRationals gen(34);
  for (int n = 0; n <= 12; ++n) {
    const Rational h = gen.positive();
    const Rational x = gen.next();
    const auto p = RationalPolynomial::monomial(n);
    ASSERT_EQ(finite_difference(p, x, h, n), Rational(factorial(n)) * pow(h, static_cast<unsigned>(n)));
  }
}

TEST(FiniteDifferenceProperty, Linearity) {
  testing::RandomRationals gen(35);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = gen.polynomial(gen.integer(0, 8));
    const auto g = gen.polynomial(gen.integer(0, 8));
    const Rational a = gen.next(), b = gen.next(), x = gen.next(), h = gen.positive();
    const int n = gen.integer(0, 8);
    const auto combo = a * f + b * g;
    ASSERT_EQ(finite_difference(combo, x, h, n),
              a * finite_difference(f, x, h, n) + b * finite_difference(g, x, h, n));
  }
}

TEST(FiniteDifferenceViaIntegral, Examples) {
  EXPECT_EQ(finite_difference_via_integral(RationalPolynomial::monomial(3), Rational(0), q("1/2"), 3), q("3/4"));
  EXPECT_EQ(finite_difference_via_integral(RationalPolynomial{1, 2, 3}, q("1/3"), q("1/5"), 3), Rational(0));
  EXPECT_THROW(finite_difference_via_integral(RationalPolynomial{1}, Rational(0), q("1/2"), 0),
               std::invalid_argument);
}

TEST(FiniteDifferenceViaIntegral, MatchesBinomialSumOnRandomDegreeFive) {
  testing::RandomRationals gen(36);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = gen.polynomial(5);
    ASSERT_EQ(finite_difference_via_integral(p, q("1/3"), q("1/5"), 3), finite_difference(p, q("1/3"), q("1/5"), 3));
  }
}

TEST(FiniteDifferenceProperty, IntegralRepresentationMatchesDirectSum) {
  testing::RandomRationals gen(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = gen.polynomial(gen.integer(0, 10));
    const int n = gen.integer(1, 8);
    const Rational x = gen.next(), h = gen.positive();
    ASSERT_EQ(finite_difference_via_integral(p, x, h, n), finite_difference(p, x, h, n));
  }
}

TEST(EquispacedIdentity, Examples) {
  const auto a = check_equispaced_identity(FuncSpec::polynomial(RationalPolynomial::monomial(2)), 2);
  EXPECT_EQ(a.lhs, Rational(1));
  EXPECT_EQ(a.rhs, Rational(1));
  EXPECT_TRUE(a.equal);

  const auto b = check_equispaced_identity(FuncSpec::polynomial(RationalPolynomial{0, -1, 1}), 1);
  EXPECT_EQ(b.lhs, Rational(0));
  EXPECT_TRUE(b.equal);

  const auto runge = check_equispaced_identity(parse_func_spec("ratfun:1;1,0,25"), 6);
  EXPECT_TRUE(runge.equal);
  EXPECT_FALSE(runge.lhs.is_zero());
  EXPECT_THROW(check_equispaced_identity(FuncSpec::polynomial(RationalPolynomial{1}), 0), std::invalid_argument);
}

TEST(DifferencesTemplate, DoubleInstantiationTracksExactValue) {
  const Polynomial<double> p{0.0, 0.0, 0.0, 1.0};
  EXPECT_NEAR(finite_difference(p, 0.0, 0.5, 3), 0.75, 1e-12);
  const KnotValueList<double> kv({0.0, 0.5, 1.0}, {0.0, 0.25, 1.0});
  EXPECT_NEAR(divided_difference_direct(kv), 1.0, 1e-12);
}

}  // namespace
}  // namespace divdiff
