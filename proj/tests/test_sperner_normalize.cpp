#include <gtest/gtest.h>

#include "test_support.hpp"

namespace sperner {
namespace {

Family fam(GroundSize g, std::initializer_list<const char *> sets) {
  std::vector<SetMask> m;
  for (const char *s : sets) m.push_back(parse_set(s, g));
  return Family(g, m);
}

const GroundSize n3(3), n4(4), n5(5), n6(6);

TEST(Band, FloorsAndCeilings) {
  EXPECT_EQ(band_floor(n4, BandMode::even), 2);
  EXPECT_EQ(band_ceiling(n4, BandMode::even), 3);
  EXPECT_EQ(band_floor(n5, BandMode::odd), 3);
  EXPECT_EQ(band_ceiling(n5, BandMode::odd), 4);
  EXPECT_EQ(band_floor(n5, BandMode::even), 2);
  EXPECT_EQ(default_mode(n6), BandMode::even);
  EXPECT_EQ(default_mode(n3), BandMode::odd);
}

TEST(PushUp, KnownExamples) {
  const auto t = push_up_min_rank(fam(n4, {"1"}), Family(n4));
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].direction, Direction::up);
  EXPECT_EQ(t.steps[0].rank, 1);
  EXPECT_EQ(format_family(t.final), "{{1,2}}");

  const Family at_floor = fam(n4, {"12", "34"});
  const auto same = push_up_min_rank(at_floor, Family(n4));
  EXPECT_TRUE(same.steps.empty());
  EXPECT_EQ(same.final, at_floor);

  EXPECT_EQ(push_up_min_rank(full_level(n5, 2), Family(n5)).final, full_level(n5, 3));
}

TEST(PushDown, KnownExamples) {
  const auto t = push_down_max_rank(fam(n4, {"1234"}), Family(n4));
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(format_family(t.final), "{{1,2,3}}");

  EXPECT_TRUE(push_down_max_rank(fam(n4, {"123"}), Family(n4)).steps.empty());

  const auto six = push_down_max_rank(full_level(n6, 5), Family(n6));
  EXPECT_EQ(six.final.size(), 6u);
  EXPECT_EQ(six.final.uniform_rank(), 4);
  EXPECT_EQ(six.final, first_segment(n6, 4, 6));
}

TEST(PushDown, RejectsSmallPartnerMembers) {
  EXPECT_THROW(push_down_max_rank(fam(n4, {"1234"}), fam(n4, {"1"})), std::invalid_argument);
}

TEST(Normalize, RejectsInvalidInput) {
  EXPECT_THROW(normalize_to_middle(fam(n4, {"1", "12"}), Family(n4)), std::invalid_argument);
  EXPECT_THROW(normalize_to_middle(fam(n4, {"12"}), fam(n4, {"34"})), std::invalid_argument);
  EXPECT_THROW(normalize_to_middle(fam(n4, {"12"}), Family(n5)), std::invalid_argument);
}

TEST(Normalize, KnownExamples) {
  const Family mid = fam(n4, {"12", "134"});
  EXPECT_TRUE(normalize_to_middle(mid, Family(n4)).steps.empty());

  const auto t = normalize_to_middle(fam(n4, {"1", "234"}), Family(n4));
  EXPECT_EQ(t.final.size(), 2u);
  EXPECT_TRUE(is_antichain(t.final));
  for (SetMask x : t.final) EXPECT_TRUE(x.size() == 2 || x.size() == 3);

  const auto odd = normalize_to_middle(fam(n3, {"1"}), Family(n3));
  ASSERT_EQ(odd.final.size(), 1u);
  EXPECT_EQ(odd.final[0].size(), 2);
}

TEST(Normalize, TraceReplaysToFinal) {
  const Family f = fam(n6, {"1", "23456"});
  const auto t = normalize_to_middle(f, Family(n6));
  std::vector<SetMask> cur(f.begin(), f.end());
  for (const auto &s : t.steps) {
    for (SetMask x : s.removed) cur.erase(std::find(cur.begin(), cur.end(), x));
    cur.insert(cur.end(), s.inserted.begin(), s.inserted.end());
    EXPECT_EQ(s.removed.size(), s.inserted.size());
  }
  EXPECT_EQ(Family(n6, cur), t.final);
  for (SetMask x : t.final) EXPECT_TRUE(x.size() == 3 || x.size() == 4);
}

// Random antichains with random cross-intersecting partners for n up to 8.
TEST(Normalize, PropertiesOnRandomPairs) {
  std::mt19937_64 rng(testing::seed());
  int successes = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const GroundSize g(n);
    std::vector<SetMask> a;
    for (int tries = 0; tries < 12; ++tries) {
      const SetMask x = testing::random_set(g, rng);
      bool ok = !x.empty();
      for (SetMask y : a) ok = ok && independent(x, y);
      if (ok) a.push_back(x);
    }
    std::vector<SetMask> b;
    for (int tries = 0; tries < 12; ++tries) {
      const SetMask x = testing::random_set(g, rng);
      bool ok = !x.empty();
      for (SetMask y : b) ok = ok && independent(x, y);
      for (SetMask y : a) ok = ok && x.meets(y);
      if (ok) b.push_back(x);
    }
    const Family A(g, a), B(g, b);
    try {
      const auto r = normalize_pair(A, B);
      ++successes;
      ASSERT_EQ(r.a.final.size(), A.size());
      ASSERT_EQ(r.b.final.size(), B.size());
      ASSERT_TRUE(is_antichain(r.a.final));
      ASSERT_TRUE(is_antichain(r.b.final));
      ASSERT_TRUE(is_cross_intersecting(r.a.final, r.b.final));
      const BandMode mode = default_mode(g);
      for (const Family *f : {&r.a.final, &r.b.final})
        for (SetMask x : *f) {
          ASSERT_GE(x.size(), band_floor(g, mode));
          ASSERT_LE(x.size(), band_ceiling(g, mode));
        }
    } catch (const SelectionFailure &e) {
      ADD_FAILURE() << "selection failure on " << format_family(A) << " | " << format_family(B) << ": " << e.what();
    }
  }
  EXPECT_EQ(successes, 400);
}

TEST(Normalize, ExhaustiveSweepSmall) {
  for (int n = 1; n <= 4; ++n) {
    const NormalizationCensus c = normalization_sweep(n, 2);
    EXPECT_TRUE(c.check.passed()) << n << ": " << (c.check.violations.empty() ? "" : c.check.violations.front());
    EXPECT_EQ(c.selection_failures, 0) << n;
    EXPECT_GT(c.pairs, 0);
  }
  EXPECT_THROW(normalization_sweep(6), std::out_of_range);
}

TEST(Normalize, SelectionFailureCarriesDiagnostics) {
  const SelectionFailure e(Direction::down, 5, 6, 2);
  EXPECT_EQ(e.rank, 5);
  EXPECT_EQ(e.needed, 6u);
  EXPECT_EQ(e.found, 2u);
  EXPECT_NE(std::string(e.what()).find("rank 5"), std::string::npos);
}

}  // namespace
}  // namespace sperner
