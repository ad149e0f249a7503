#pragma once

// The Boolean lattice 2^{1..n} for n <= 6, with families encoded as 64-bit
// "power-set masks": bit s is set iff the subset whose element mask is s
// belongs to the family.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sperner/family.hpp"

namespace sperner {

using PowersetMask = std::uint64_t;

inline constexpr int kMaxLatticeGround = 6;

class SubsetLattice {
 public:
  explicit SubsetLattice(int n) : n_(n), count_(1 << n) {
    if (n < 1 || n > kMaxLatticeGround)
      throw std::out_of_range("sperner: power-set masks support 1 <= n <= 6");
    for (int s = 0; s < count_; ++s) {
      for (int t = 0; t < count_; ++t) {
        const PowersetMask bit = PowersetMask{1} << t;
        if ((s & t) == s || (s & t) == t) comparable_[s] |= bit;
        if ((s & t) != 0) meets_[s] |= bit;
      }
      later_[s] = s == 63 ? 0 : ~((PowersetMask{1} << (s + 1)) - 1);
    }
    universe_ = count_ == 64 ? ~PowersetMask{0} : (PowersetMask{1} << count_) - 1;
    for (int s = 0; s < count_; ++s) later_[s] &= universe_;
    for (int k = 0; k <= n; ++k)
      for (int s = 0; s < count_; ++s)
        if (std::popcount(static_cast<unsigned>(s)) == k) level_[k] |= PowersetMask{1} << s;
  }

  int n() const { return n_; }
  GroundSize ground() const { return GroundSize(n_); }
  int subset_count() const { return count_; }
  PowersetMask universe() const { return universe_; }
  /// Subsets comparable with s (including s).
  PowersetMask comparable(int s) const { return comparable_[s]; }
  /// Subsets that meet s.
  PowersetMask meets(int s) const { return meets_[s]; }
  PowersetMask level(int k) const { return level_[k]; }

  /// Subsets meeting every member of `family`.
  PowersetMask cross_partners(PowersetMask family) const {
    PowersetMask allowed = universe_;
    for (PowersetMask b = family; b != 0; b &= b - 1) allowed &= meets_[std::countr_zero(b)];
    return allowed;
  }

  bool cross_intersecting(PowersetMask a, PowersetMask b) const {
    return (b & ~cross_partners(a)) == 0;
  }

  bool is_antichain(PowersetMask f) const {
    for (PowersetMask b = f; b != 0; b &= b - 1) {
      const int s = std::countr_zero(b);
      if ((f & comparable_[s]) != (PowersetMask{1} << s)) return false;
    }
    return true;
  }

  /// Calls fn(PowersetMask) once per antichain whose members lie in `within`,
  /// including the empty family. Members are added in increasing subset index.
  template <class Fn>
  void for_each_antichain(PowersetMask within, Fn &&fn) const {
    struct Frame {
      PowersetMask chosen, candidates;
    };
    std::vector<Frame> stack{{0, within & universe_}};
    stack.reserve(static_cast<std::size_t>(count_) + 1);
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      fn(f.chosen);
      // Push in reverse so smaller indices are explored first.
      for (PowersetMask b = f.candidates; b != 0;) {
        const int s = 63 - std::countl_zero(b);
        b &= ~(PowersetMask{1} << s);
        stack.push_back({f.chosen | (PowersetMask{1} << s), f.candidates & later_[s] & ~comparable_[s]});
      }
    }
  }

  template <class Fn>
  void for_each_antichain(Fn &&fn) const {
    for_each_antichain(universe_, std::forward<Fn>(fn));
  }

  std::vector<PowersetMask> antichains(PowersetMask within) const {
    std::vector<PowersetMask> out;
    for_each_antichain(within, [&](PowersetMask f) { out.push_back(f); });
    return out;
  }

  Family to_family(PowersetMask f) const {
    std::vector<SetMask> members;
    for (PowersetMask b = f; b != 0; b &= b - 1) members.emplace_back(std::countr_zero(b));
    return Family(ground(), std::move(members));
  }

  PowersetMask from_family(const Family &f) const {
    if (f.ground().n() != n_) throw std::invalid_argument("sperner: family over another ground set");
    PowersetMask out = 0;
    for (SetMask x : f) out |= PowersetMask{1} << x.bits();
    return out;
  }

 private:
  int n_;
  int count_;
  PowersetMask universe_ = 0;
  std::array<PowersetMask, 64> comparable_{};
  std::array<PowersetMask, 64> meets_{};
  std::array<PowersetMask, 64> later_{};
  std::array<PowersetMask, kMaxLatticeGround + 1> level_{};
};

/// Symmetric-group action on power-set masks, for isomorphism reduction.
class PermutationGroup {
 public:
  explicit PermutationGroup(int n) : count_(1 << n) {
    if (n < 1 || n > kMaxLatticeGround) throw std::out_of_range("sperner: permutations need n <= 6");
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      std::array<std::uint8_t, 64> image{};
      for (int s = 0; s < count_; ++s) {
        int t = 0;
        for (int e = 0; e < n; ++e)
          if (s >> e & 1) t |= 1 << p[static_cast<std::size_t>(e)];
        image[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(t);
      }
      images_.push_back(image);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::size_t size() const { return images_.size(); }

  /// Image of element-mask s under permutation `perm`.
  int apply(std::size_t perm, int s) const { return images_[perm][static_cast<std::size_t>(s)]; }

  PowersetMask apply(std::size_t perm, PowersetMask f) const {
    PowersetMask out = 0;
    const auto &img = images_[perm];
    for (PowersetMask b = f; b != 0; b &= b - 1)
      out |= PowersetMask{1} << img[static_cast<std::size_t>(std::countr_zero(b))];
    return out;
  }

  /// Minimal image of one family.
  PowersetMask canonical(PowersetMask f) const {
    PowersetMask best = ~PowersetMask{0};
    for (std::size_t p = 0; p < images_.size(); ++p) best = std::min(best, apply(p, f));
    return best;
  }

  /// Minimal image of an ordered pair, acting on both coordinates at once.
  std::pair<PowersetMask, PowersetMask> canonical(PowersetMask a, PowersetMask b) const {
    std::pair<PowersetMask, PowersetMask> best{~PowersetMask{0}, ~PowersetMask{0}};
    for (std::size_t p = 0; p < images_.size(); ++p) best = std::min(best, std::pair{apply(p, a), apply(p, b)});
    return best;
  }

 private:
  int count_;
  std::vector<std::array<std::uint8_t, 64>> images_;
};

}  // namespace sperner
