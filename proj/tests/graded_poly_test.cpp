#include "bircalc/error.hpp"
#include "bircalc/graded_poly.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bircalc;

namespace {

const std::vector<std::int64_t> kW123{1, 2, 3};

GradedPolynomial P(const char* text, const std::vector<std::int64_t>& w = kW123) {
  return GradedPolynomial::parse(text, w);
}

}  // namespace

TEST(GradedPolynomial, ParseAndPrint) {
  EXPECT_EQ(P("x1*x2 - x3 + 1/2*x1^5").to_string(), "x1*x2 - x3 + 1/2*x1^5");
  EXPECT_EQ(P("x3 + x2 + x1").to_string(), "x1 + x2 + x3");
  EXPECT_EQ(P("2*x1*x1 - 2*x1^2").to_string(), "0");
  EXPECT_EQ(P("-3/6 + x2").to_string(), "-1/2 + x2");
  EXPECT_EQ(P("x1^2*3").coefficient({2, 0, 0}), Rational(3));
}

TEST(GradedPolynomial, ParseErrors) {
  EXPECT_THROW(P("x4"), ParseError);
  EXPECT_THROW(P("x0"), ParseError);
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("x1 +"), ParseError);
  EXPECT_THROW(P("x1**x2"), ParseError);
  EXPECT_THROW(P("1/0*x1"), ParseError);
  EXPECT_THROW(P("y1"), ParseError);
  EXPECT_THROW(GradedPolynomial({1, 0, 2}), DomainError);
}

TEST(GradedPolynomial, WeightedValuationExamples) {
  EXPECT_EQ(weighted_valuation(P("x2")), 2);
  EXPECT_EQ(weighted_valuation(P("x1^2 + x2")), 2);
  // Frozen from the chart-substitution oracle.
  EXPECT_EQ(oracle::chart_valuation(P("x1*x2 - x3 + x1^5")), 3);
  EXPECT_EQ(weighted_valuation(P("x1*x2 - x3 + x1^5")), 3);
}

TEST(GradedPolynomial, ZeroIsRejected) {
  const GradedPolynomial zero(kW123);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_THROW(weighted_valuation(zero), DomainError);
  EXPECT_THROW(homogeneous_decomposition(zero), DomainError);
  EXPECT_THROW(chart_pullback(zero), DomainError);
  try {
    weighted_valuation(zero);
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "valuation of zero undefined");
  }
}

TEST(GradedPolynomial, HomogeneousDecompositionExamples) {
  const auto a = homogeneous_decomposition(P("x1 + x2"));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].degree, 1);
  EXPECT_EQ(a[0].part, P("x1"));
  EXPECT_EQ(a[1].degree, 2);
  EXPECT_EQ(a[1].part, P("x2"));

  const auto b = homogeneous_decomposition(P("x1*x2 - x3"));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].degree, 3);
  EXPECT_EQ(b[0].part, P("x1*x2 - x3"));

  const auto c = homogeneous_decomposition(P("x1^3 + x2 + x3"));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].degree, 2);
  EXPECT_EQ(c[0].part, P("x2"));
  EXPECT_EQ(c[1].degree, 3);
  EXPECT_EQ(c[1].part, P("x1^3 + x3"));
}

TEST(GradedPolynomial, ChartPullbackExamples) {
  const std::vector<std::int64_t> lifted{1, 1, 2, 3};
  {
    const auto [k, strict] = chart_pullback(P("x1"));
    EXPECT_EQ(k, 1);
    EXPECT_EQ(strict, GradedPolynomial::parse("x2", lifted));
  }
  {
    // Oracle: u^3 x1 x2 - u^3 x3 has u-power 3.
    EXPECT_EQ(oracle::chart_valuation(P("x1*x2 - x3")), 3);
    const auto [k, strict] = chart_pullback(P("x1*x2 - x3"));
    EXPECT_EQ(k, 3);
    EXPECT_EQ(strict, GradedPolynomial::parse("x2*x3 - x4", lifted));
  }
  {
    EXPECT_EQ(oracle::chart_valuation(P("x2^2 + x1*x3")), 4);
    const auto [k, strict] = chart_pullback(P("x2^2 + x1*x3"));
    EXPECT_EQ(k, 4);
    EXPECT_EQ(strict, GradedPolynomial::parse("x3^2 + x2*x4", lifted));
  }
  {
    // Mixed degrees keep positive powers of u on the higher parts.
    const auto [k, strict] = chart_pullback(P("x2 + x1^3"));
    EXPECT_EQ(k, 2);
    EXPECT_EQ(strict, GradedPolynomial::parse("x3 + x1*x2^3", lifted));
  }
}

TEST(GradedPolynomial, Derivative) {
  EXPECT_EQ(P("x1^3*x2 + 5*x3").derivative(0), P("3*x1^2*x2"));
  EXPECT_EQ(P("x1^3*x2 + 5*x3").derivative(2), P("5"));
  EXPECT_TRUE(P("x1").derivative(1).is_zero());
}

TEST(GradedPolynomial, MismatchedWeightsRejected) {
  EXPECT_THROW(P("x1") + P("x1", {1, 1, 1}), DomainError);
  EXPECT_THROW(P("x1") * P("x1", {1, 1, 1}), DomainError);
}

class GradedPolynomialProperty : public ::testing::TestWithParam<std::vector<std::int64_t>> {};

TEST_P(GradedPolynomialProperty, ValuationIsAdditiveOnProducts) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const auto f = oracle::random_polynomial(rng, GetParam(), 4, 4);
    const auto g = oracle::random_polynomial(rng, GetParam(), 4, 4);
    EXPECT_EQ(weighted_valuation(f * g), weighted_valuation(f) + weighted_valuation(g));
  }
}

TEST_P(GradedPolynomialProperty, ValuationOfSumIsAtLeastMinimum) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const auto f = oracle::random_polynomial(rng, GetParam(), 4, 3);
    const auto g = oracle::random_polynomial(rng, GetParam(), 4, 3);
    const auto sum = f + g;
    if (sum.is_zero()) continue;
    EXPECT_GE(weighted_valuation(sum), std::min(weighted_valuation(f), weighted_valuation(g)));
  }
  // Cancellation of the lowest parts raises the valuation.
  const auto w = GetParam();
  const auto f = GradedPolynomial::variable(w, 0) + GradedPolynomial::variable(w, 1) * GradedPolynomial::variable(w, 2);
  EXPECT_GT(weighted_valuation(f - GradedPolynomial::variable(w, 0)), weighted_valuation(f));
}

TEST_P(GradedPolynomialProperty, DecompositionResumsAndIsHomogeneous) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto f = oracle::random_polynomial(rng, GetParam());
    const auto parts = homogeneous_decomposition(f);
    GradedPolynomial sum(GetParam());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      EXPECT_TRUE(parts[k].part.is_homogeneous());
      EXPECT_EQ(parts[k].part.weighted_degree(parts[k].part.terms().begin()->first), parts[k].degree);
      if (k > 0) EXPECT_LT(parts[k - 1].degree, parts[k].degree);
      sum += parts[k].part;
    }
    EXPECT_EQ(sum, f);
    EXPECT_EQ(parts.front().degree, weighted_valuation(f));
  }
}

TEST_P(GradedPolynomialProperty, ChartPullbackMatchesSubstitutionOracle) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const auto f = oracle::random_polynomial(rng, GetParam(), 5, 4);
    const auto [k, strict] = chart_pullback(f);
    EXPECT_EQ(k, oracle::chart_valuation(f));
    EXPECT_EQ(k, weighted_valuation(f));
    // u^k * strict == substituted f, and u does not divide the strict transform.
    const auto substituted = oracle::substitute_chart(f);
    oracle::SparsePoly rebuilt;
    for (const auto& [e, c] : strict.terms()) {
      std::vector<int> ee(e.begin(), e.end());
      ee[0] += static_cast<int>(k);
      rebuilt[ee] = c;
    }
    EXPECT_EQ(rebuilt, substituted);
    bool some_term_without_u = false;
    for (const auto& [e, c] : strict.terms()) some_term_without_u = some_term_without_u || e[0] == 0;
    EXPECT_TRUE(some_term_without_u);
  }
}

INSTANTIATE_TEST_SUITE_P(Weights, GradedPolynomialProperty,
                         ::testing::Values(std::vector<std::int64_t>{1, 1, 1}, std::vector<std::int64_t>{1, 2, 3},
                                           std::vector<std::int64_t>{1, 3, 5},
                                           std::vector<std::int64_t>{2, 1, 4, 3, 1}));

TEST(Weights, Parse) {
  EXPECT_EQ(parse_weights("1,2,3"), (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_EQ(parse_weights(" 2 , 5"), (std::vector<std::int64_t>{2, 5}));
  EXPECT_THROW(parse_weights("1,,2"), ParseError);
  EXPECT_THROW(parse_weights("0,1"), ParseError);
  EXPECT_THROW(parse_weights("-1,2"), ParseError);
}

TEST(RationalText, RoundTrip) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(to_string(parse_rational("-4/2")), "-2");
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}
