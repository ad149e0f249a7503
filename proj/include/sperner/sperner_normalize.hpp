#pragma once

// Sperner operations: replace the smallest members of an antichain by sets
// from their shade (or the largest by sets from their shadow) until every
// member sits in a two-rank middle band, keeping the family size, the
// antichain property, and cross-intersection with a partner family.
//
// Candidates are taken greedily in squashed order among shade (shadow) sets
// that are incomparable with every retained member and meet every partner
// member, so traces are deterministic.

#include <stdexcept>
#include <string>
#include <vector>

#include "sperner/cascade_shadow.hpp"
#include "sperner/family.hpp"

namespace sperner {

enum class Direction { up, down };

/// even: band {floor(n/2), floor(n/2)+1}; odd: band {ceil(n/2), ceil(n/2)+1}.
/// The two coincide when n is even.
enum class BandMode { even, odd };

inline BandMode default_mode(GroundSize g) { return g.n() % 2 == 0 ? BandMode::even : BandMode::odd; }

inline int band_floor(GroundSize g, BandMode mode) {
  return mode == BandMode::even ? g.n() / 2 : (g.n() + 1) / 2;
}
inline int band_ceiling(GroundSize g, BandMode mode) { return band_floor(g, mode) + 1; }

struct NormalizationStep {
  Direction direction = Direction::up;
  int rank = 0;  // the rank that was vacated
  std::vector<SetMask> removed;
  std::vector<SetMask> inserted;
};

struct NormalizationTrace {
  std::vector<NormalizationStep> steps;
  Family final;

  explicit NormalizationTrace(Family f) : final(std::move(f)) {}
};

/// Not enough admissible replacement sets for a size-preserving step.
class SelectionFailure : public std::runtime_error {
 public:
  SelectionFailure(Direction dir, int rank, std::size_t needed, std::size_t found)
      : std::runtime_error("sperner: Sperner operation " + std::string(dir == Direction::up ? "up" : "down") +
                           " from rank " + std::to_string(rank) + " found " + std::to_string(found) +
                           " admissible sets, needed " + std::to_string(needed)),
        direction(dir), rank(rank), needed(needed), found(found) {}

  Direction direction;
  int rank;
  std::size_t needed;
  std::size_t found;
};

namespace detail {

inline void require_pair(const Family &f, const Family &partner) {
  if (!(f.ground() == partner.ground()))
    throw std::invalid_argument("sperner: family and partner over different ground sets");
  if (!is_antichain(f)) throw std::invalid_argument("sperner: normalization needs an antichain");
  if (!is_cross_intersecting(f, partner))
    throw std::invalid_argument("sperner: family and partner are not cross-intersecting");
}

// Replaces level `rank` of f by the first |level| admissible sets of `pool`.
inline NormalizationTrace replace_level(const Family &f, const Family &partner, int rank,
                                        const Family &pool, Direction dir) {
  const auto vacated = f.level(rank);
  std::vector<SetMask> retained;
  for (SetMask x : f)
    if (x.size() != rank) retained.push_back(x);

  std::vector<SetMask> chosen;
  for (SetMask c : pool) {
    if (chosen.size() == vacated.size()) break;
    bool ok = true;
    for (SetMask z : retained)
      if (comparable(c, z)) {
        ok = false;
        break;
      }
    for (SetMask y : partner) {
      if (!ok) break;
      if (!c.meets(y)) ok = false;
    }
    if (ok) chosen.push_back(c);
  }
  if (chosen.size() < vacated.size()) throw SelectionFailure(dir, rank, vacated.size(), chosen.size());

  NormalizationStep step{dir, rank, to_vector(vacated), chosen};
  retained.insert(retained.end(), chosen.begin(), chosen.end());
  NormalizationTrace t(Family(f.ground(), std::move(retained)));
  t.steps.push_back(std::move(step));
  return t;
}

inline void append(NormalizationTrace &into, NormalizationTrace &&more) {
  for (auto &s : more.steps) into.steps.push_back(std::move(s));
  into.final = std::move(more.final);
}

}  // namespace detail

/// One Sperner operation upwards if the minimum rank is below the band floor;
/// otherwise an empty trace.
inline NormalizationTrace push_up_min_rank(const Family &f, const Family &partner,
                                           BandMode mode) {
  detail::require_pair(f, partner);
  const int i = f.min_rank();
  if (f.empty() || i >= band_floor(f.ground(), mode)) return NormalizationTrace(f);
  const Family low(f.ground(), to_vector(f.level(i)));
  return detail::replace_level(f, partner, i, shade(low), Direction::up);
}

inline NormalizationTrace push_up_min_rank(const Family &f, const Family &partner) {
  return push_up_min_rank(f, partner, default_mode(f.ground()));
}

/// One Sperner operation downwards if the maximum rank is above the band
/// ceiling. Every partner member must have at least n/2 elements.
inline NormalizationTrace push_down_max_rank(const Family &f, const Family &partner,
                                             BandMode mode) {
  detail::require_pair(f, partner);
  const int j = f.max_rank();
  if (f.empty() || j <= band_ceiling(f.ground(), mode)) return NormalizationTrace(f);
  for (SetMask y : partner)
    if (2 * y.size() < f.ground().n())
      throw std::invalid_argument("sperner: push_down needs partner members of size >= n/2, got " +
                                  format_set(y));
  const Family high(f.ground(), to_vector(f.level(j)));
  return detail::replace_level(f, partner, j, shadow(high), Direction::down);
}

inline NormalizationTrace push_down_max_rank(const Family &f, const Family &partner) {
  return push_down_max_rank(f, partner, default_mode(f.ground()));
}

/// Pushes up from the floor side only.
inline NormalizationTrace raise_to_floor(const Family &f, const Family &partner, BandMode mode) {
  NormalizationTrace trace(f);
  // Each successful step raises the minimum rank, so n + 1 rounds always suffice.
  for (int round = 0; round <= f.ground().n(); ++round) {
    auto next = push_up_min_rank(trace.final, partner, mode);
    if (next.steps.empty()) return trace;
    detail::append(trace, std::move(next));
  }
  throw std::logic_error("sperner: push-up loop exceeded its fuel");
}

inline NormalizationTrace lower_to_ceiling(const Family &f, const Family &partner, BandMode mode) {
  NormalizationTrace trace(f);
  for (int round = 0; round <= f.ground().n(); ++round) {
    auto next = push_down_max_rank(trace.final, partner, mode);
    if (next.steps.empty()) return trace;
    detail::append(trace, std::move(next));
  }
  throw std::logic_error("sperner: push-down loop exceeded its fuel");
}

/// Push up until the floor is reached, then push down to the ceiling, with a
/// fixed partner.
inline NormalizationTrace normalize_to_middle(const Family &f, const Family &partner,
                                              BandMode mode) {
  NormalizationTrace trace = raise_to_floor(f, partner, mode);
  detail::append(trace, lower_to_ceiling(trace.final, partner, mode));
  return trace;
}

inline NormalizationTrace normalize_to_middle(const Family &f, const Family &partner) {
  return normalize_to_middle(f, partner, default_mode(f.ground()));
}

struct PairNormalization {
  NormalizationTrace a;
  NormalizationTrace b;
};

/// Normalizes both members of a cross-intersecting antichain pair:
/// raise A, raise B, then lower A, lower B, each against the current partner.
inline PairNormalization normalize_pair(const Family &a, const Family &b, BandMode mode) {
  NormalizationTrace ta = raise_to_floor(a, b, mode);
  NormalizationTrace tb = raise_to_floor(b, ta.final, mode);
  detail::append(ta, lower_to_ceiling(ta.final, tb.final, mode));
  detail::append(tb, lower_to_ceiling(tb.final, ta.final, mode));
  return {std::move(ta), std::move(tb)};
}

inline PairNormalization normalize_pair(const Family &a, const Family &b) {
  return normalize_pair(a, b, default_mode(a.ground()));
}

}  // namespace sperner
