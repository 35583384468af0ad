#include <hypernull/polynomial.hpp>

#include <gtest/gtest.h>

using namespace hypernull;

namespace {

IntPoly P(std::vector<long> c)
{
  std::vector<BigInt> b(c.begin(), c.end());
  return IntPoly(std::move(b));
}

}  // namespace

TEST(IntPoly, TrimAndZeroOrder)
{
  EXPECT_TRUE(P({0, 0}).is_zero());
  EXPECT_EQ(P({0, 0, 3, 0}).degree(), 2);
  EXPECT_EQ(P({0, 0, 3}).zero_order(), 2);
  EXPECT_EQ(P({5}).zero_order(), 0);
  EXPECT_THROW(P({}).zero_order(), std::domain_error);
}

TEST(IntPoly, Arithmetic)
{
  const auto a = P({1, 1});   // 1 + L
  const auto b = P({-1, 1});  // -1 + L
  EXPECT_EQ(a * b, P({-1, 0, 1}));
  EXPECT_EQ(a + b, P({0, 2}));
  EXPECT_EQ(a - a, P({}));
  EXPECT_EQ(a.shifted_up(3), P({0, 0, 0, 1, 1}));
  EXPECT_EQ(P({0, 0, 4, 6}).shifted_down(2), P({4, 6}));
  EXPECT_THROW(P({1, 1}).shifted_down(1), std::domain_error);
  EXPECT_EQ(P({0, 6, -4}).content(), 2);
  EXPECT_EQ(P({-1, 0, 1}).to_string(), "L^2 - 1");
}

TEST(IntPoly, GcdAndExactQuotient)
{
  const auto f = P({-1, 1});
  const auto g = P({2, 1});
  const auto h = P({3, 0, 1});
  const auto d = poly_gcd(f * h, g * h * P({2}));
  EXPECT_EQ(d, h);
  EXPECT_EQ(exact_quotient(f * h, h), f);
  EXPECT_THROW(exact_quotient(f * h + P({1}), h), std::domain_error);
}

TEST(RationalFn, NormalizeCancelsLambdaPowerAndContent)
{
  auto r = RationalFn::make(P({0, 0, 4, 2}), P({0, -6, 0, -2}));
  // (4L^2 + 2L^3) / (-6L - 2L^3)  ->  (-2L - L^2) / (3 + L^2)
  EXPECT_EQ(r.num, P({0, -2, -1}));
  EXPECT_EQ(r.den, P({3, 0, 1}));
  EXPECT_THROW(RationalFn::make(P({1}), P({})), std::domain_error);
  EXPECT_EQ(RationalFn::make(P({}), P({0, 5})).den, P({1}));
}

TEST(RationalFn, FullReductionCancelsCommonFactor)
{
  const auto common = P({1, 1});
  const auto r = RationalFn::make(P({2, 1}) * common, P({-3, 1}) * common);
  const auto reduced = reduce_fully(r);
  EXPECT_EQ(reduced.num, P({2, 1}));
  EXPECT_EQ(reduced.den, P({-3, 1}));
}
