#include <gtest/gtest.h>

#include <array>

#include "test_support.hpp"

namespace sperner {
namespace {

// Pascal's triangle as the binomial oracle, independent of binomial().
struct Pascal {
  std::array<std::array<__int128, 64>, 64> c{};
  Pascal() {
    for (int n = 0; n < 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
  }
  __int128 operator()(int n, int k) const { return k < 0 || k > n ? 0 : c[n][k]; }
};
const Pascal C;

__int128 d_oracle(int n, int r) { return r > n ? 0 : C(n, r - 1) - C(n, r); }
// (k+1) * D*(n,r,k), an integer.
__int128 d_star_scaled(int n, int r, int k) { return r > n ? 0 : (k + 1) * C(n, r - 1) - k * C(n, r); }

TEST(D, KnownExamples) {
  EXPECT_EQ(D(5, 3), 0);
  EXPECT_EQ(D(4, 3), 2);
  EXPECT_EQ(D(6, 2), -9);
  EXPECT_EQ(D(3, 5), 0);
  EXPECT_THROW(D(0, 1), std::invalid_argument);
  EXPECT_THROW(D(3, 0), std::invalid_argument);
}

TEST(D, MatchesPascalOracle) {
  for (int n = 1; n <= 60; ++n)
    for (int r = 1; r <= 62; ++r) ASSERT_EQ(static_cast<__int128>(D(n, r)), d_oracle(n, r)) << n << "," << r;
}

TEST(DStar, KnownExamples) {
  EXPECT_EQ(D_star(2, 1, 2), Rational(-1, 3));
  for (Int k = 1; k <= 20; ++k) EXPECT_EQ(D_star(k, 1, k), Rational(1) - Rational(k * k, k + 1));
  EXPECT_EQ(D_star(2, 1, 2), Rational(1) - Rational(4, 3));
  EXPECT_EQ(D_star(3, 4, 7), Rational(0));
  EXPECT_THROW(D_star(3, 1, 0), std::invalid_argument);
}

TEST(DStar, MatchesScaledOracleAndDenominator) {
  for (int k = 1; k <= 25; ++k)
    for (int n = 1; n <= 50; ++n)
      for (int r = 1; r <= n + 1; ++r) {
        const Rational v = D_star(n, r, k);
        ASSERT_EQ((k + 1) % v.den(), 0);
        ASSERT_EQ(static_cast<__int128>(v.num()) * (k + 1), d_star_scaled(n, r, k) * v.den());
      }
}

TEST(HockeyStick, KnownExamples) {
  EXPECT_EQ(hockey_stick(2, 2), 10);
  EXPECT_EQ(hockey_stick(7, 0), 1);
  EXPECT_EQ(hockey_stick(0, 3), 4);
  EXPECT_THROW(hockey_stick(-1, 2), std::invalid_argument);
}

TEST(CheckLemma, KnownExamples) {
  EXPECT_EQ(D(1, 1) + D(2, 2), 1);
  const CheckReport l313 = check_lemma(LemmaId::lem3_13, 2);
  EXPECT_TRUE(l313.passed());
  EXPECT_EQ(l313.instances, 1);
  Rational s;
  for (Int r = 1; r <= 2; ++r) s += D_star(1 + r, r, 2);
  EXPECT_EQ(s, Rational(2, 3));
  EXPECT_EQ(D(3, 3), 2);
}

TEST(CheckLemma, EveryLemmaAtDefaultRange) {
  for (const auto &l : kLemmas) {
    const CheckReport r = check_lemma(l.id);
    EXPECT_TRUE(r.passed()) << r.id << ": " << (r.violations.empty() ? "" : r.violations.front());
    EXPECT_GT(r.instances, 0) << r.id;
    EXPECT_EQ(r.id, l.key);
  }
}

TEST(CheckLemma, LookupAndOverflow) {
  EXPECT_EQ(parse_lemma_id("3.6"), LemmaId::lem3_6);
  EXPECT_FALSE(parse_lemma_id("3.9").has_value());
  EXPECT_THROW(check_lemma(LemmaId::lem3_6, 200), std::overflow_error);
}

// The same claims swept against the Pascal oracle with integer-only tests.
TEST(LemmaOracle, Lemma33Trichotomy) {
  for (int n = 1; n <= 40; ++n)
    for (int r = 1; r <= n; ++r) {
      const __int128 d = d_oracle(n, r);
      const int side = 2 * r - (n + 1);
      ASSERT_EQ(d > 0, side > 0);
      ASSERT_EQ(d == 0, side == 0);
    }
}

TEST(LemmaOracle, Lemma36SumIsOne) {
  for (int j = 2; j <= 30; ++j) {
    __int128 s = 0;
    for (int r = 1; r <= j; ++r) s += d_oracle(j - 2 + r, r);
    ASSERT_EQ(s, 1) << j;
  }
}

TEST(LemmaOracle, Lemma310GapHalf) {
  for (int k = 2; k <= 20; ++k)
    for (int j = 1; j <= k; ++j)
      for (int i = 2 * j - 1; i <= 2 * k - 1; ++i)
        ASSERT_GE(2 * (d_star_scaled(i, j, k) - d_star_scaled(i + 1, j, k)), static_cast<__int128>(k + 1));
}

TEST(LemmaOracle, Lemma313SumIsKOverKPlusOne) {
  for (int k = 2; k <= 20; ++k) {
    __int128 s = 0;
    for (int r = 1; r <= k; ++r) s += d_star_scaled(k - 1 + r, r, k);
    ASSERT_EQ(s, k) << k;  // (k+1) * k/(k+1)
    ASSERT_GE(3 * s, 2 * (k + 1));
  }
}

}  // namespace
}  // namespace sperner
