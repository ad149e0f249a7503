#pragma once

// Duplicate-free families of subsets over a shared ground set, kept sorted by
// (cardinality, squashed order) with a per-rank index.

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sperner/binomial.hpp"
#include "sperner/set_mask.hpp"

namespace sperner {

class Family {
 public:
  explicit Family(GroundSize g) : ground_(g), offsets_(static_cast<std::size_t>(g.n()) + 2, 0) {}

  /// Throws std::invalid_argument on duplicates or sets that do not fit `g`.
  Family(GroundSize g, std::vector<SetMask> members) : ground_(g), members_(std::move(members)) {
    for (SetMask x : members_)
      if (!x.fits(g))
        throw std::invalid_argument("sperner: set " + format_set(x) + " exceeds n=" +
                                    std::to_string(g.n()));
    std::sort(members_.begin(), members_.end(), RankThenSquash{});
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
      throw std::invalid_argument("sperner: family has duplicate members");
    index_ranks();
  }

  /// Like the constructor but silently drops duplicates.
  static Family collect(GroundSize g, std::vector<SetMask> members) {
    std::sort(members.begin(), members.end(), RankThenSquash{});
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Family(g, std::move(members));
  }

  GroundSize ground() const { return ground_; }
  std::span<const SetMask> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  SetMask operator[](std::size_t i) const { return members_[i]; }

  /// Members of cardinality k, in squashed order.
  std::span<const SetMask> level(int k) const {
    if (k < 0 || k > ground_.n()) return {};
    const auto b = offsets_[static_cast<std::size_t>(k)];
    const auto e = offsets_[static_cast<std::size_t>(k) + 1];
    return std::span<const SetMask>(members_).subspan(b, e - b);
  }

  bool contains(SetMask x) const {
    return std::binary_search(members_.begin(), members_.end(), x, RankThenSquash{});
  }

  int min_rank() const { return members_.empty() ? -1 : members_.front().size(); }
  int max_rank() const { return members_.empty() ? -1 : members_.back().size(); }

  /// The common cardinality, if every member has the same one.
  std::optional<int> uniform_rank() const {
    if (members_.empty() || min_rank() != max_rank()) return std::nullopt;
    return min_rank();
  }

  friend bool operator==(const Family &a, const Family &b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  void index_ranks() {
    offsets_.assign(static_cast<std::size_t>(ground_.n()) + 2, 0);
    for (SetMask x : members_) ++offsets_[static_cast<std::size_t>(x.size()) + 1];
    for (std::size_t k = 1; k < offsets_.size(); ++k) offsets_[k] += offsets_[k - 1];
  }

  GroundSize ground_;
  std::vector<SetMask> members_;
  std::vector<std::size_t> offsets_;
};

inline bool is_antichain(const Family &f) {
  const auto m = f.members();
  // Sorted by cardinality, so only a later member can strictly contain an earlier one.
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[i].subset_of(m[j])) return false;
  return true;
}

inline bool is_intersecting(const Family &f) {
  for (SetMask x : f)
    for (SetMask y : f)
      if (!x.meets(y)) return false;
  return true;
}

inline bool is_cross_intersecting(const Family &a, const Family &b) {
  if (!(a.ground() == b.ground()))
    throw std::invalid_argument("sperner: families over different ground sets");
  for (SetMask x : a)
    for (SetMask y : b)
      if (!x.meets(y)) return false;
  return true;
}

/// All k-subsets of {1..n} in squashed order.
inline Family full_level(GroundSize g, int k) {
  if (k < 0 || k > g.n())
    throw std::out_of_range("sperner: rank " + std::to_string(k) + " outside 0.." +
                            std::to_string(g.n()));
  if (binomial(g.n(), k) > 50'000'000)
    throw std::length_error("sperner: level too large to materialize");
  std::vector<SetMask> out;
  out.reserve(static_cast<std::size_t>(binomial(g.n(), k)));
  if (k == 0) return Family(g, {SetMask{}});
  // Gosper's hack walks same-weight masks in increasing numeric order.
  const std::uint64_t limit = std::uint64_t{1} << g.n();
  for (std::uint64_t c = (std::uint64_t{1} << k) - 1; c < limit;) {
    out.emplace_back(c);
    const std::uint64_t low = c & (~c + 1);
    const std::uint64_t ripple = c + low;
    if (ripple == 0) break;
    c = (((ripple ^ c) >> 2) / low) | ripple;
  }
  return Family(g, std::move(out));
}

/// Members as a vector, handy for building derived families.
inline std::vector<SetMask> to_vector(std::span<const SetMask> s) {
  return std::vector<SetMask>(s.begin(), s.end());
}

}  // namespace sperner
