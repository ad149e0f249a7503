#include <gtest/gtest.h>

#include "test_support.hpp"

namespace sperner {
namespace {

TEST(Binomial, SmallValuesAndEdges) {
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(60, 30), 118264581564861424LL);
  EXPECT_THROW(binomial(-1, 0), std::invalid_argument);
  EXPECT_THROW(binomial(100, 50), std::overflow_error);
}

TEST(Binomial, PascalRule) {
  for (int n = 1; n <= 60; ++n)
    for (int k = 1; k < n; ++k) ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Binomial, AtMost) {
  EXPECT_TRUE(binomial_at_most(5, 2, 10));
  EXPECT_FALSE(binomial_at_most(5, 2, 9));
  EXPECT_FALSE(binomial_at_most(200, 100, 1000));
}

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
  EXPECT_EQ(Rational(-1, 2).den(), 2);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(7, 3).str(), "7/3");
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_EQ(Rational(5, 3).mixed(), "1 2/3");
  EXPECT_EQ(Rational(-5, 3).mixed(), "-1 2/3");
  EXPECT_EQ(Rational(2, 3).mixed(), "2/3");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, FieldLawsRandom) {
  std::mt19937_64 rng(testing::seed());
  std::uniform_int_distribution<Int> num(-1000, 1000), den(1, 1000);
  for (int t = 0; t < 5000; ++t) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Rational(0));
    if (b.sign() != 0) {
      ASSERT_EQ(a / b * b, a);
    }
    ASSERT_EQ(a < b, (a - b).sign() < 0);
    ASSERT_EQ(std::gcd(a.num(), a.den()) <= 1 || a.num() == 0, true);
    ASSERT_GT(a.den(), 0);
  }
}

TEST(Rational, OverflowIsAnError) {
  const Rational big(std::numeric_limits<Int>::max() / 2);
  EXPECT_THROW(big * Rational(4), std::overflow_error);
  EXPECT_THROW(big + big + big, std::overflow_error);
}

}  // namespace
}  // namespace sperner
