#include <gtest/gtest.h>

#include "test_support.hpp"

namespace sperner {
namespace {

SetMask S(const char *s) { return parse_set(s, GroundSize(9)); }

TEST(SquashCompare, KnownExamples) {
  EXPECT_EQ(squash_compare(S("134"), S("234")), std::strong_ordering::less);
  EXPECT_EQ(squash_compare(S("234"), S("125")), std::strong_ordering::less);
  EXPECT_EQ(squash_compare(S("123"), S("123")), std::strong_ordering::equal);
  EXPECT_EQ(squash_compare(S("125"), S("234")), std::strong_ordering::greater);
  EXPECT_THROW(squash_compare(S("12"), S("123")), std::invalid_argument);
}

TEST(SquashCompare, FullListForFiveThree) {
  const char *order[] = {"123", "124", "134", "234", "125", "135", "235", "145", "245", "345"};
  const Family f = full_level(GroundSize(5), 3);
  ASSERT_EQ(f.size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(f[i], S(order[i])) << i;
}

// Numeric comparison against the symmetric-difference definition, plus total
// order axioms, over every level for n <= 8.
TEST(SquashCompare, MatchesDefinitionAndIsTotalOrder) {
  for (int n = 1; n <= 8; ++n) {
    const GroundSize g(n);
    for (int k = 0; k <= n; ++k) {
      const Family level = full_level(g, k);
      for (SetMask a : level)
        for (SetMask b : level) {
          const bool lt = squash_less(a, b), gt = squash_less(b, a);
          ASSERT_EQ(lt, testing::squash_less_by_definition(a, b));
          ASSERT_EQ(lt + gt + (a == b), 1);  // trichotomy
        }
      if (n > 6) continue;
      for (SetMask a : level)
        for (SetMask b : level)
          for (SetMask c : level)
            if (squash_less(a, b) && squash_less(b, c)) {
              ASSERT_TRUE(squash_less(a, c));
            }
    }
  }
}

TEST(Rank, KnownExamples) {
  EXPECT_EQ(rank(S("123")).index, 0);
  EXPECT_EQ(rank(S("345")).index, 9);
  EXPECT_EQ(rank(S("125")).index, 4);
  EXPECT_EQ(rank(S("125")).k, 3);
  EXPECT_EQ(rank(SetMask()).index, 0);
}

TEST(Unrank, KnownExamples) {
  EXPECT_EQ(unrank(GroundSize(5), 3, 3), S("234"));
  EXPECT_EQ(unrank(GroundSize(4), 2, 0), S("12"));
  EXPECT_EQ(unrank(GroundSize(5), 3, 7), S("145"));
  EXPECT_THROW(unrank(GroundSize(5), 3, 10), std::out_of_range);
  EXPECT_THROW(unrank(GroundSize(5), 3, -1), std::out_of_range);
  EXPECT_THROW(unrank(GroundSize(5), 6, 0), std::out_of_range);
}

TEST(Rank, BijectionUpToTen) {
  for (int n = 1; n <= 10; ++n) {
    const GroundSize g(n);
    for (int k = 0; k <= n; ++k) {
      const Family level = full_level(g, k);
      for (std::size_t i = 0; i < level.size(); ++i) {
        const auto r = rank(level[i]);
        ASSERT_EQ(r.k, k);
        ASSERT_EQ(r.index, static_cast<Int>(i));
        ASSERT_EQ(unrank(g, k, r.index), level[i]);
      }
    }
  }
}

TEST(Rank, LargeGroundSampled) {
  std::mt19937_64 rng(testing::seed());
  const GroundSize g(60);
  for (int t = 0; t < 2000; ++t) {
    const int k = static_cast<int>(rng() % 61);
    const SetMask x = testing::random_k_set(g, k, rng);
    ASSERT_EQ(unrank(g, k, rank(x).index), x);
  }
}

TEST(Segment, KnownExamples) {
  const GroundSize g4(4), g5(5);
  EXPECT_EQ(format_family(last_segment(g4, 2, 1)), "{{3,4}}");
  EXPECT_EQ(format_family(last_segment(g4, 2, 3)), "{{1,4},{2,4},{3,4}}");
  EXPECT_EQ(format_family(first_segment(g5, 3, 2)), "{{1,2,3},{1,2,4}}");
  EXPECT_EQ(first_segment(g5, 3, 10), full_level(g5, 3));
  EXPECT_TRUE(first_segment(g5, 3, 0).empty());
  EXPECT_EQ(first_segment(GroundSize(3), 0, 1).size(), 1u);
}

TEST(Segment, Errors) {
  const GroundSize g5(5);
  EXPECT_THROW(first_segment(g5, 3, 11), std::out_of_range);
  EXPECT_THROW(last_segment(g5, 3, -1), std::out_of_range);
  EXPECT_THROW(segment(g5, 3, 8, 3), std::out_of_range);
  EXPECT_THROW(segment(g5, 6, 0, 0), std::out_of_range);
  EXPECT_THROW(first_segment(GroundSize(21), 2, 1), std::length_error);
  EXPECT_THROW(preceding_segment(g5, 3, 6, 5), std::out_of_range);
}

TEST(Segment, LastIsLevelMinusFirst) {
  for (int n = 1; n <= 9; ++n) {
    const GroundSize g(n);
    for (int k = 0; k <= n; ++k) {
      const Int level = binomial(n, k);
      for (Int m = 0; m <= level; ++m) {
        const Family first = first_segment(g, k, level - m), last = last_segment(g, k, m);
        ASSERT_EQ(first.size() + last.size(), static_cast<std::size_t>(level));
        for (SetMask x : last) ASSERT_FALSE(first.contains(x));
      }
    }
  }
}

TEST(Segment, WindowsMatchUnrank) {
  const GroundSize g(7);
  for (int k = 0; k <= 7; ++k) {
    const Int level = binomial(7, k);
    for (Int start = 0; start <= level; ++start)
      for (Int m = 0; start + m <= level; m += 3) {
        const Family w = segment(g, k, start, m);
        ASSERT_EQ(static_cast<Int>(w.size()), m);
        for (Int i = 0; i < m; ++i) ASSERT_EQ(w[static_cast<std::size_t>(i)], unrank(g, k, start + i));
      }
  }
}

TEST(Segment, PrecedingEndsBeforeLast) {
  const GroundSize g(6);
  const Family p = preceding_segment(g, 3, 4, 5);
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(rank(p[4]).index, 20 - 4 - 1);
  EXPECT_EQ(rank(p[0]).index, 20 - 4 - 5);
}

// x <_s y iff complement(y) <_s complement(x).
TEST(Squash, ComplementReversesOrder) {
  for (int n = 1; n <= 8; ++n) {
    const GroundSize g(n);
    for (int k = 0; k <= n; ++k) {
      const Family level = full_level(g, k);
      for (SetMask x : level)
        for (SetMask y : level)
          ASSERT_EQ(squash_less(x, y), squash_less(complement(y, g), complement(x, g)));
    }
  }
}

}  // namespace
}  // namespace sperner
