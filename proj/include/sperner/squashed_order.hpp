#pragma once

// Squashed order on k-sets: A <_s B iff the largest element of the symmetric
// difference lies in B. On bit masks of equal weight this is numeric order,
// and positions follow the combinatorial number system.

#include <compare>
#include <stdexcept>
#include <string>

#include "sperner/binomial.hpp"
#include "sperner/family.hpp"

namespace sperner {

inline constexpr int kMaxMaterializedGround = 20;

struct SquashRank {
  int k = 0;
  Int index = 0;
  friend bool operator==(const SquashRank &, const SquashRank &) = default;
};

inline std::strong_ordering squash_compare(SetMask a, SetMask b) {
  if (a.size() != b.size())
    throw std::invalid_argument("sperner: squash_compare needs equal cardinalities");
  return a.bits() <=> b.bits();
}

inline bool squash_less(SetMask a, SetMask b) { return squash_compare(a, b) < 0; }

/// Number of |x|-sets preceding x: sum of C(c_i - 1, i) over c_1 < ... < c_k.
inline SquashRank rank(SetMask x) {
  SquashRank r{x.size(), 0};
  int i = 1;
  for (int c : x.elements()) r.index += binomial(c - 1, i++);
  return r;
}

inline SetMask unrank(GroundSize g, int k, Int index) {
  if (k < 0 || k > g.n()) throw std::out_of_range("sperner: rank outside 0..n");
  if (index < 0 || index >= binomial(g.n(), k))
    throw std::out_of_range("sperner: index " + std::to_string(index) + " outside level C(" +
                            std::to_string(g.n()) + "," + std::to_string(k) + ")");
  std::uint64_t bits = 0;
  int hi = g.n();
  for (int i = k; i >= 1; --i) {
    // Largest c with C(c-1, i) <= index.
    int c = i;
    while (c < hi && binomial(c, i) <= index) ++c;
    index -= binomial(c - 1, i);
    bits |= std::uint64_t{1} << (c - 1);
    hi = c - 1;
  }
  return SetMask(bits);
}

/// m consecutive k-sets starting at position `start` (a C_{n,k}(m)).
inline Family segment(GroundSize g, int k, Int start, Int m) {
  if (k < 0 || k > g.n()) throw std::out_of_range("sperner: rank outside 0..n");
  if (g.n() > kMaxMaterializedGround)
    throw std::length_error("sperner: segments are only materialized for n <= 20");
  const Int level = binomial(g.n(), k);
  if (m < 0 || start < 0 || start > level || m > level - start)
    throw std::out_of_range("sperner: window [" + std::to_string(start) + ", +" +
                            std::to_string(m) + ") outside level of size " +
                            std::to_string(level));
  std::vector<SetMask> out;
  out.reserve(static_cast<std::size_t>(m));
  if (m > 0) {
    std::uint64_t c = unrank(g, k, start).bits();
    for (Int i = 0; i < m; ++i) {
      out.emplace_back(c);
      if (c == 0) break;  // k = 0: the single empty set
      const std::uint64_t low = c & (~c + 1);
      const std::uint64_t ripple = c + low;
      c = (((ripple ^ c) >> 2) / low) | ripple;
    }
  }
  return Family(g, std::move(out));
}

/// F_{n,k}(m): the first m k-sets.
inline Family first_segment(GroundSize g, int k, Int m) { return segment(g, k, 0, m); }

/// L_{n,k}(m): the last m k-sets.
inline Family last_segment(GroundSize g, int k, Int m) {
  if (k < 0 || k > g.n()) throw std::out_of_range("sperner: rank outside 0..n");
  const Int level = binomial(g.n(), k);
  if (m < 0 || m > level) throw std::out_of_range("sperner: segment longer than level");
  return segment(g, k, level - m, m);
}

/// P^r_{n,k}(m): the m k-sets immediately preceding L_{n,k}(r).
inline Family preceding_segment(GroundSize g, int k, Int r, Int m) {
  if (k < 0 || k > g.n()) throw std::out_of_range("sperner: rank outside 0..n");
  const Int level = binomial(g.n(), k);
  if (r < 0 || m < 0 || r + m > level)
    throw std::out_of_range("sperner: preceding window outside level");
  return segment(g, k, level - r - m, m);
}

}  // namespace sperner
