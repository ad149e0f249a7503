#pragma once

// Exhaustive verification at desk scale:
//  - the maximum of |A|+|B| over cross-intersecting antichain pairs,
//  - the extremal and almost-extremal characterizations,
//  - the N_4 antichain bound with its four extremal classes,
//  - inequality sweeps over shadows of initial segments and shades of final
//    segments of the middle levels,
//  - size/property preservation of Sperner normalization over all pairs.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sperner/cascade_shadow.hpp"
#include "sperner/check_report.hpp"
#include "sperner/parallel.hpp"
#include "sperner/sperner_normalize.hpp"
#include "sperner/subset_lattice.hpp"

namespace sperner {

/// Closed-form maximum of |A|+|B|.
inline Int cross_sum_bound(int n) {
  if (n % 2 == 1) return 2 * binomial(n, (n + 1) / 2);
  return binomial(n, n / 2) + binomial(n, n / 2 + 1);
}

/// Every antichain of 2^{1..n} exactly once. n = 6 (7 828 354 antichains)
/// needs `allow_long`.
inline std::vector<PowersetMask> enumerate_antichains(GroundSize g, bool allow_long = false) {
  if (g.n() > kMaxLatticeGround || (g.n() == kMaxLatticeGround && !allow_long))
    throw std::out_of_range("sperner: antichain enumeration supports n <= 5 (n = 6 with the long flag)");
  return SubsetLattice(g.n()).antichains(SubsetLattice(g.n()).universe());
}

/// Dedekind number M(n) counted through monotone Boolean functions:
/// a monotone f on n variables splits as (f|x_n=0) <= (f|x_n=1).
inline Int dedekind_oracle(int n) {
  if (n < 0 || n > kMaxLatticeGround) throw std::out_of_range("sperner: oracle supports n <= 6");
  if (n == 0) return 2;
  std::vector<std::uint64_t> mono{0, 1};  // truth tables on 0 variables
  for (int k = 1; k < n; ++k) {
    const int half = 1 << (k - 1);
    std::vector<std::uint64_t> next;
    for (auto lo : mono)
      for (auto hi : mono)
        if ((lo & ~hi) == 0) next.push_back(lo | (hi << half));
    mono = std::move(next);
  }
  Int count = 0;
  for (auto lo : mono)
    for (auto hi : mono)
      if ((lo & ~hi) == 0) ++count;
  return count;
}

struct FamilyPair {
  PowersetMask a = 0;
  PowersetMask b = 0;
  friend auto operator<=>(const FamilyPair &, const FamilyPair &) = default;
};

struct PairClass {
  FamilyPair canonical;
  Int ordered_count = 0;  // raw ordered pairs in this isomorphism class
};

struct SearchOptions {
  int workers = 1;
  double budget_seconds = 0;  // 0: unlimited
  bool allow_long = false;
};

struct SearchCensus {
  int n = 0;
  Int optimum = 0;
  Int formula_value = 0;
  bool match = false;
  bool complete = true;
  bool middle_band_only = false;
  Int antichains = 0;
  std::vector<FamilyPair> optimal;       // raw ordered pairs, sorted
  std::vector<FamilyPair> near_optimal;  // raw ordered pairs at optimum - 1, sorted
  std::vector<PairClass> optimal_classes;
  std::vector<PairClass> near_classes;
  Int optimal_unordered = 0;
  Int near_unordered = 0;
};

namespace detail {

inline Int unordered_count(const std::vector<FamilyPair> &pairs) {
  Int c = 0;
  for (const auto &p : pairs)
    if (p.a <= p.b) ++c;
  return c;
}

inline std::vector<PairClass> classify(const PermutationGroup &group, const std::vector<FamilyPair> &pairs) {
  std::map<FamilyPair, Int> classes;
  for (const auto &p : pairs) {
    const auto [ca, cb] = group.canonical(p.a, p.b);
    ++classes[{ca, cb}];
  }
  std::vector<PairClass> out;
  for (const auto &[key, count] : classes) out.push_back({key, count});
  return out;
}

class Deadline {
 public:
  explicit Deadline(double seconds)
      : active_(seconds > 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds))) {}
  bool expired() const { return active_ && std::chrono::steady_clock::now() >= end_; }

 private:
  bool active_;
  std::chrono::steady_clock::time_point end_;
};

}  // namespace detail

/// Exhaustive maximum of |A|+|B| with all optimal and optimum-1 ordered pairs.
/// n <= 5 scans every antichain pair; n = 6 (long flag) searches only
/// families inside ranks {3,4}.
inline SearchCensus max_cross_sum(GroundSize g, const SearchOptions &opt = {}) {
  const int n = g.n();
  if (n > kMaxLatticeGround || (n == kMaxLatticeGround && !opt.allow_long))
    throw std::out_of_range("sperner: pair search supports n <= 5 (n = 6 with the long flag)");
  const SubsetLattice lattice(n);
  SearchCensus census;
  census.n = n;
  census.formula_value = cross_sum_bound(n);
  census.middle_band_only = n == 6;
  const PowersetMask within = census.middle_band_only ? (lattice.level(3) | lattice.level(4)) : lattice.universe();

  std::vector<PowersetMask> ac = lattice.antichains(within);
  census.antichains = static_cast<Int>(ac.size());
  std::stable_sort(ac.begin(), ac.end(), [](PowersetMask x, PowersetMask y) {
    const int sx = std::popcount(x), sy = std::popcount(y);
    return sx != sy ? sx > sy : x < y;
  });
  std::vector<int> sizes(ac.size());
  for (std::size_t i = 0; i < ac.size(); ++i) sizes[i] = std::popcount(ac[i]);
  const int max_size = sizes.empty() ? 0 : sizes.front();

  const detail::Deadline deadline(opt.budget_seconds);
  std::atomic<bool> timed_out{false};
  const std::size_t chunks = std::min<std::size_t>(ac.size(), 256);

  // Pass 1: the optimum. The shared best only prunes; it never changes the answer.
  std::atomic<Int> best{0};
  parallel_chunks(ac.size(), chunks, opt.workers, [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      if (timed_out.load(std::memory_order_relaxed) || ((i & 255) == 0 && deadline.expired())) {
        timed_out = true;
        return;
      }
      const Int sa = sizes[i];
      if (sa + max_size <= best.load(std::memory_order_relaxed)) return;
      const PowersetMask allowed = lattice.cross_partners(ac[i]);
      for (std::size_t j = 0; j < ac.size(); ++j) {
        const Int total = sa + sizes[j];
        Int cur = best.load(std::memory_order_relaxed);
        if (total <= cur) break;
        if ((ac[j] & ~allowed) == 0) {
          while (total > cur && !best.compare_exchange_weak(cur, total)) {
          }
          break;
        }
      }
    }
  });
  census.optimum = best.load();

  // Pass 2: every ordered pair at optimum or optimum - 1.
  const Int threshold = census.optimum - 1;
  std::vector<std::vector<FamilyPair>> found(chunks);
  if (!timed_out) {
    parallel_chunks(ac.size(), chunks, opt.workers, [&](std::size_t c, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        if (timed_out.load(std::memory_order_relaxed) || ((i & 255) == 0 && deadline.expired())) {
          timed_out = true;
          return;
        }
        const Int sa = sizes[i];
        if (sa + max_size < threshold) return;
        const PowersetMask allowed = lattice.cross_partners(ac[i]);
        for (std::size_t j = 0; j < ac.size() && sa + sizes[j] >= threshold; ++j)
          if ((ac[j] & ~allowed) == 0) found[c].push_back({ac[i], ac[j]});
      }
    });
  }
  census.complete = !timed_out;

  for (const auto &part : found)
    for (const auto &p : part)
      (std::popcount(p.a) + std::popcount(p.b) == census.optimum ? census.optimal : census.near_optimal)
          .push_back(p);
  std::sort(census.optimal.begin(), census.optimal.end());
  std::sort(census.near_optimal.begin(), census.near_optimal.end());
  census.optimal_unordered = detail::unordered_count(census.optimal);
  census.near_unordered = detail::unordered_count(census.near_optimal);
  const PermutationGroup group(n);
  census.optimal_classes = detail::classify(group, census.optimal);
  census.near_classes = detail::classify(group, census.near_optimal);
  census.match = census.complete && census.optimum == census.formula_value;
  return census;
}

/// The extremal pairs the characterization predicts, as ordered pairs (both orders).
inline std::vector<FamilyPair> predicted_optimal_pairs(const SubsetLattice &L) {
  const int n = L.n();
  std::set<FamilyPair> out;
  if (n % 2 == 1) {
    const PowersetMask mid = L.level((n + 1) / 2);
    out.insert({mid, mid});
  } else {
    const PowersetMask lo = L.level(n / 2), hi = L.level(n / 2 + 1);
    out.insert({lo, hi});
    out.insert({hi, lo});
  }
  return {out.begin(), out.end()};
}

struct PredictedNear {
  std::vector<FamilyPair> ordered;    // both orders
  std::vector<FamilyPair> oriented;   // orientation as stated: A is the lower/full family
};

/// Almost-extremal pairs the characterization predicts.
inline PredictedNear predicted_near_pairs(const SubsetLattice &L) {
  const int n = L.n();
  std::set<FamilyPair> oriented;
  auto drop_each = [](PowersetMask level, auto &&emit) {
    for (PowersetMask b = level; b != 0; b &= b - 1) emit(level & ~(b & (~b + 1)));
  };
  if (n % 2 == 1) {
    const PowersetMask mid = L.level((n + 1) / 2);
    drop_each(mid, [&](PowersetMask sub) { oriented.insert({mid, sub}); });
  } else {
    const PowersetMask lo = L.level(n / 2), hi = L.level(n / 2 + 1);
    drop_each(hi, [&](PowersetMask sub) { oriented.insert({lo, sub}); });  // case (i)
    drop_each(lo, [&](PowersetMask sub) { oriented.insert({sub, hi}); });  // case (ii)
  }
  std::set<FamilyPair> ordered(oriented);
  for (const auto &p : oriented) ordered.insert({p.b, p.a});
  return {{ordered.begin(), ordered.end()}, {oriented.begin(), oriented.end()}};
}

struct CharacterizationReport {
  CheckReport check;
  Int expected = 0;
  Int found = 0;
  Int missing = 0;
  Int unexpected = 0;
  Int oriented_found = 0;  // found pairs in the stated orientation
};

namespace detail {

inline CharacterizationReport compare_pairs(std::string id, std::string claim, const SubsetLattice &L,
                                            const std::vector<FamilyPair> &expected,
                                            const std::vector<FamilyPair> &found) {
  CharacterizationReport r;
  r.check = CheckReport(std::move(id), std::move(claim));
  r.expected = static_cast<Int>(expected.size());
  r.found = static_cast<Int>(found.size());
  const std::set<FamilyPair> e(expected.begin(), expected.end()), f(found.begin(), found.end());
  auto show = [&](const FamilyPair &p) {
    return format_family(L.to_family(p.a)) + " | " + format_family(L.to_family(p.b));
  };
  for (const auto &p : e) {
    const bool ok = f.count(p) > 0;
    if (!ok) ++r.missing;
    r.check.record(ok, "missing " + show(p));
  }
  for (const auto &p : f) {
    const bool ok = e.count(p) > 0;
    if (!ok) ++r.unexpected;
    r.check.record(ok, "unexpected " + show(p));
  }
  return r;
}

}  // namespace detail

/// Optimum equals the closed form and the optimal pairs are exactly the predicted ones.
inline CharacterizationReport verify_extremal(const SearchCensus &c) {
  const SubsetLattice L(c.n);
  auto r = detail::compare_pairs("extremal", "optimal pairs are exactly the middle-level pairs", L,
                                 predicted_optimal_pairs(L), c.optimal);
  r.check.record(c.complete, "search incomplete");
  r.check.record(c.optimum == c.formula_value,
                 "optimum " + std::to_string(c.optimum) + " != " + std::to_string(c.formula_value));
  return r;
}

/// The optimum-1 pairs are exactly the predicted almost-extremal ones.
inline CharacterizationReport verify_almost_extremal(const SearchCensus &c) {
  const SubsetLattice L(c.n);
  const PredictedNear pred = predicted_near_pairs(L);
  auto r = detail::compare_pairs("almost-extremal", "optimum-1 pairs are exactly the predicted families", L,
                                 pred.ordered, c.near_optimal);
  r.check.record(c.complete, "search incomplete");
  const std::set<FamilyPair> oriented(pred.oriented.begin(), pred.oriented.end());
  for (const auto &p : c.near_optimal) r.oriented_found += oriented.count(p) ? 1 : 0;
  return r;
}

struct Lemma315Report {
  CheckReport check;
  Int antichains = 0;
  Int with_rank_1_or_3 = 0;
  std::vector<PowersetMask> extremal_classes;  // canonical forms of size-4 examples found
  std::vector<PowersetMask> expected_classes;
};

/// Antichains of N_4 containing a 1-set or 3-set have at most 4 members, and
/// the size-4 ones form exactly the four stated isomorphism classes.
inline Lemma315Report verify_lemma_3_15() {
  const SubsetLattice L(4);
  const PermutationGroup G(4);
  const GroundSize g(4);
  Lemma315Report rep;
  rep.check = CheckReport("3.15", "antichains of N_4 with a 1-set or 3-set have size <= 4; 4 extremal classes");
  std::set<PowersetMask> classes;
  const PowersetMask odd_ranks = L.level(1) | L.level(3);
  L.for_each_antichain([&](PowersetMask f) {
    ++rep.antichains;
    if ((f & odd_ranks) == 0) return;
    ++rep.with_rank_1_or_3;
    const int size = std::popcount(f);
    rep.check.record(size <= 4, format_family(L.to_family(f)));
    if (size == 4) classes.insert(G.canonical(f));
  });
  auto parse = [&](std::initializer_list<const char *> sets) {
    std::vector<SetMask> m;
    for (const char *s : sets) m.push_back(parse_set(s, g));
    return L.from_family(Family(g, m));
  };
  std::set<PowersetMask> expected{G.canonical(L.level(1)), G.canonical(L.level(3)),
                                  G.canonical(parse({"1", "23", "24", "34"})),
                                  G.canonical(parse({"12", "13", "14", "234"}))};
  rep.extremal_classes.assign(classes.begin(), classes.end());
  rep.expected_classes.assign(expected.begin(), expected.end());
  rep.check.record(expected.size() == 4, "expected classes not distinct");
  rep.check.record(classes == expected, "extremal classes differ from the four stated families");
  return rep;
}

/// For odd n: |Delta F_{n,ceil(n/2)+1}(m)| >= m + 2 for every m, via the
/// closed form; also brute force for n <= brute_max.
inline CheckReport sweep_lemma_3_8(int n_max, int brute_max = 9) {
  if (n_max < 3 || n_max > 13) throw std::out_of_range("sperner: Lemma 3.8 sweep needs 3 <= n_max <= 13");
  CheckReport rep{"3.8", "|Delta F_{n,ceil(n/2)+1}(m)| >= m+2, odd n"};
  for (int n = 3; n <= n_max; n += 2) {
    const GroundSize g(n);
    const int k = (n + 1) / 2 + 1;
    const Int level = binomial(n, k);
    for (Int m = 1; m <= level; ++m) {
      const Int closed = kkt_shadow_bound(m, k);
      const std::string tup = "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
      rep.record(closed >= m + 2, tup + " closed form " + std::to_string(closed));
      if (n <= brute_max) {
        const Int brute = static_cast<Int>(shadow(first_segment(g, k, m)).size());
        rep.record(brute == closed, tup + " brute force " + std::to_string(brute) + " != closed form");
      }
    }
  }
  return rep;
}

struct Lemma314Report {
  CheckReport check;
  bool n4_exception_confirmed = false;  // n=4, m=3 gives equality, not strict
};

/// For even n >= 6 and 1 <= m < C(n,n/2)-1:
/// (n+2)|Nabla L_{n,n/2}(m)| > n m + (n+2), exact in integers.
inline Lemma314Report sweep_lemma_3_14(int n_max) {
  if (n_max < 6 || n_max > 12) throw std::out_of_range("sperner: Lemma 3.14 sweep needs 6 <= n_max <= 12");
  Lemma314Report rep;
  rep.check = CheckReport("3.14", "|Nabla L_{n,n/2}(m)| > n/(n+2) m + 1, even n >= 6");
  auto strict = [](Int n, Int m, Int shade_size) {
    return (n + 2) * shade_size > n * m + (n + 2);
  };
  for (int n = 6; n <= n_max; n += 2) {
    const GroundSize g(n);
    const int k = n / 2;
    const Int level = binomial(n, k);
    for (Int m = 1; m < level - 1; ++m) {
      const Int closed = shade_of_last_bound(m, g, k);
      const Int brute = static_cast<Int>(shade(last_segment(g, k, m)).size());
      const std::string tup = "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
      rep.check.record(strict(n, m, closed), tup + " |Nabla L|=" + std::to_string(closed));
      rep.check.record(brute == closed, tup + " brute force " + std::to_string(brute) + " != closed form");
    }
  }
  const GroundSize four(4);
  const Int s43 = static_cast<Int>(shade(last_segment(four, 2, 3)).size());
  rep.n4_exception_confirmed = s43 == 3 && !strict(4, 3, s43) && 6 * s43 == 4 * 3 + 6;
  rep.check.notes.push_back("n=4, m=3: |Nabla L|=" + std::to_string(s43) + " vs bound 3 (equality, not strict)");
  return rep;
}

struct NormalizationCensus {
  CheckReport check;
  Int pairs = 0;
  Int selection_failures = 0;
  std::vector<std::string> failure_examples;
};

/// Normalizes every ordered cross-intersecting antichain pair over N_n and
/// checks size, antichain and cross-intersection preservation plus the band.
inline NormalizationCensus normalization_sweep(int n, int workers = 1) {
  if (n < 1 || n > 5) throw std::out_of_range("sperner: normalization sweep supports n <= 5");
  const SubsetLattice L(n);
  const GroundSize g(n);
  const BandMode mode = default_mode(g);
  const int lo = band_floor(g, mode), hi = band_ceiling(g, mode);
  const auto ac = L.antichains(L.universe());
  std::vector<Family> families;
  families.reserve(ac.size());
  for (auto f : ac) families.push_back(L.to_family(f));

  const std::size_t chunks = std::min<std::size_t>(ac.size(), 64);
  std::vector<NormalizationCensus> parts(chunks);
  parallel_chunks(ac.size(), chunks, workers, [&](std::size_t c, std::size_t b, std::size_t e) {
    NormalizationCensus &out = parts[c];
    for (std::size_t i = b; i < e; ++i) {
      const PowersetMask allowed = L.cross_partners(ac[i]);
      for (std::size_t j = 0; j < ac.size(); ++j) {
        if ((ac[j] & ~allowed) != 0) continue;
        ++out.pairs;
        const Family &A = families[i];
        const Family &B = families[j];
        try {
          const auto r = normalize_pair(A, B, mode);
          const Family &a = r.a.final, &b = r.b.final;
          bool band = true;
          for (SetMask x : a) band = band && x.size() >= lo && x.size() <= hi;
          for (SetMask x : b) band = band && x.size() >= lo && x.size() <= hi;
          const bool ok = a.size() == A.size() && b.size() == B.size() && is_antichain(a) &&
                          is_antichain(b) && is_cross_intersecting(a, b) && band;
          out.check.record(ok, format_family(A) + " | " + format_family(B));
        } catch (const SelectionFailure &ex) {
          ++out.selection_failures;
          if (out.failure_examples.size() < 20)
            out.failure_examples.push_back(format_family(A) + " | " + format_family(B) + ": " + ex.what());
        }
      }
    }
  });
  NormalizationCensus total;
  total.check = CheckReport("normalization", "Sperner operations preserve size, antichain, cross-intersection");
  for (auto &p : parts) {
    total.check.merge(p.check);
    total.pairs += p.pairs;
    total.selection_failures += p.selection_failures;
    for (auto &s : p.failure_examples)
      if (total.failure_examples.size() < 20) total.failure_examples.push_back(s);
  }
  return total;
}

}  // namespace sperner
