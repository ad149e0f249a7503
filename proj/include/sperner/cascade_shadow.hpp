#pragma once

// Shadows and shades by brute force, and the Kruskal-Katona counting
// machinery built on k-binomial (cascade) representations.

#include <string>
#include <unordered_set>
#include <vector>

#include "sperner/binomial.hpp"
#include "sperner/family.hpp"
#include "sperner/family_io.hpp"
#include "sperner/rational.hpp"
#include "sperner/squashed_order.hpp"

namespace sperner {

namespace detail {

inline int require_uniform(const Family &f, const char *op) {
  if (f.empty()) return -1;
  const auto k = f.uniform_rank();
  if (!k) throw std::invalid_argument(std::string("sperner: ") + op + " needs a uniform family");
  return *k;
}

template <class Fn>
void for_each_facet(SetMask s, Fn &&fn) {
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) fn(SetMask(s.bits() & ~(b & (~b + 1))));
}

template <class Fn>
void for_each_cofacet(SetMask s, GroundSize g, Fn &&fn) {
  for (std::uint64_t b = ~s.bits() & g.full_bits(); b != 0; b &= b - 1)
    fn(SetMask(s.bits() | (b & (~b + 1))));
}

}  // namespace detail

/// All (k-1)-sets below some member of a k-uniform family.
inline Family shadow(const Family &f) {
  const int k = detail::require_uniform(f, "shadow");
  if (k == 0) throw std::invalid_argument("sperner: shadow of rank-0 sets is undefined");
  std::vector<SetMask> out;
  out.reserve(f.size() * static_cast<std::size_t>(k > 0 ? k : 0));
  for (SetMask s : f) detail::for_each_facet(s, [&](SetMask x) { out.push_back(x); });
  return Family::collect(f.ground(), std::move(out));
}

/// All (k+1)-sets above some member of a k-uniform family.
inline Family shade(const Family &f) {
  const int k = detail::require_uniform(f, "shade");
  if (k == f.ground().n()) throw std::invalid_argument("sperner: shade of rank-n sets is undefined");
  std::vector<SetMask> out;
  for (SetMask s : f) detail::for_each_cofacet(s, f.ground(), [&](SetMask x) { out.push_back(x); });
  return Family::collect(f.ground(), std::move(out));
}

/// Union over S in f of the facets of S lying in no shadow of an earlier k-set.
/// Walks the level from the start, so cost grows with the last member's position.
inline Family new_shadow(const Family &f) {
  const int k = detail::require_uniform(f, "new_shadow");
  if (k < 0) return Family(f.ground());
  if (k == 0) throw std::invalid_argument("sperner: new-shadow of rank-0 sets is undefined");
  const GroundSize g = f.ground();
  const Int last = rank(f.members().back()).index;
  const Family walk = first_segment(g, k, last + 1);
  std::unordered_set<std::uint64_t> seen;
  std::vector<SetMask> out;
  for (SetMask t : walk) {
    const bool wanted = f.contains(t);
    detail::for_each_facet(t, [&](SetMask x) {
      if (seen.insert(x.bits()).second && wanted) out.push_back(x);
    });
  }
  return Family::collect(g, std::move(out));
}

/// Union over S in f of the cofacets of S lying in no shade of a later k-set.
inline Family new_shade(const Family &f) {
  const int k = detail::require_uniform(f, "new_shade");
  if (k < 0) return Family(f.ground());
  const GroundSize g = f.ground();
  if (k == g.n()) throw std::invalid_argument("sperner: new-shade of rank-n sets is undefined");
  const Int level = binomial(g.n(), k);
  const Int first = rank(f.members().front()).index;
  const Family walk = last_segment(g, k, level - first);
  std::unordered_set<std::uint64_t> seen;
  std::vector<SetMask> out;
  const auto m = walk.members();
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    const bool wanted = f.contains(*it);
    detail::for_each_cofacet(*it, g, [&](SetMask x) {
      if (seen.insert(x.bits()).second && wanted) out.push_back(x);
    });
  }
  return Family::collect(g, std::move(out));
}

struct CascadeTerm {
  Int a = 0;
  int i = 0;
  friend bool operator==(const CascadeTerm &, const CascadeTerm &) = default;
};

/// m = C(a_k,k) + C(a_{k-1},k-1) + ... + C(a_t,t), a_k > ... > a_t >= t >= 1.
struct CascadeRep {
  int k = 0;
  std::vector<CascadeTerm> terms;

  Int value() const {
    Int v = 0;
    for (const auto &t : terms) v = detail::checked_add(v, binomial(t.a, t.i));
    return v;
  }

  /// "C(4,3)+C(2,2)".
  std::string str() const {
    std::string s;
    for (const auto &t : terms) {
      if (!s.empty()) s += '+';
      s += "C(" + std::to_string(t.a) + "," + std::to_string(t.i) + ")";
    }
    return s;
  }
};

/// Greedy k-binomial representation.
inline CascadeRep cascade(Int m, int k) {
  if (m <= 0) throw std::invalid_argument("sperner: cascade needs m >= 1");
  if (k < 1) throw std::invalid_argument("sperner: cascade needs k >= 1");
  CascadeRep rep{k, {}};
  Int rest = m;
  for (int i = k; i >= 1 && rest > 0; --i) {
    // Largest a with C(a,i) <= rest; C(i,i) = 1 <= rest always holds.
    Int lo = i, hi = i;
    while (binomial_at_most(hi, i, rest)) {
      lo = hi;
      hi = hi > (Int{1} << 61) ? std::numeric_limits<Int>::max() : hi * 2;
      if (hi == std::numeric_limits<Int>::max()) break;
    }
    while (hi - lo > 1) {
      const Int mid = lo + (hi - lo) / 2;
      if (binomial_at_most(mid, i, rest)) lo = mid;
      else hi = mid;
    }
    rep.terms.push_back({lo, i});
    rest -= binomial(lo, i);
  }
  return rep;
}

/// |Delta F_{n,k}(m)| = sum of C(a_i, i-1) over the cascade of m.
inline Int kkt_shadow_bound(Int m, int k) {
  Int total = 0;
  for (const auto &t : cascade(m, k).terms)
    total = detail::checked_add(total, binomial(t.a, t.i - 1));
  return total;
}

/// |Nabla L_{n,k}(m)|, through the duality with shadows of initial segments
/// of the complementary level.
inline Int shade_of_last_bound(Int m, GroundSize g, int k) {
  if (k < 0 || k >= g.n()) throw std::out_of_range("sperner: shade bound needs 0 <= k < n");
  if (m < 0 || m > binomial(g.n(), k)) throw std::out_of_range("sperner: m outside level");
  if (m == 0) return 0;
  return kkt_shadow_bound(m, g.n() - k);
}

/// Counting lower bound |Nabla A| >= (n-k)/(k+1) |A|.
inline Rational local_shade_bound(Int m, GroundSize g, int k) {
  if (k < 0 || k >= g.n()) throw std::out_of_range("sperner: shade bound needs 0 <= k < n");
  if (m < 0) throw std::out_of_range("sperner: negative family size");
  return Rational(g.n() - k, k + 1) * Rational(m);
}

/// Counting lower bound |Delta A| >= k/(n-k+1) |A|.
inline Rational local_shadow_bound(Int m, GroundSize g, int k) {
  if (k < 1 || k > g.n()) throw std::out_of_range("sperner: shadow bound needs 0 < k <= n");
  if (m < 0) throw std::out_of_range("sperner: negative family size");
  return Rational(k, g.n() - k + 1) * Rational(m);
}

/// One row of the shade table for the middle level of an even ground set.
struct ShadeTableRow {
  Int m = 0;
  SetMask last_set;  // the m-th set from the end of level n/2
  Family new_shade;  // its contribution to the shade of L_{n,n/2}(m)
  Int shade_size = 0;     // |Nabla L_{n,n/2}(m)|, brute force
  Rational bound;         // n/(n+2) * m + 1
};

inline std::vector<ShadeTableRow> shade_table(GroundSize g) {
  const int n = g.n();
  if (n % 2 != 0) throw std::invalid_argument("sperner: shade table needs even n");
  const int k = n / 2;
  const Int level = binomial(n, k);
  std::vector<ShadeTableRow> rows;
  for (Int m = 1; m <= level; ++m) {
    const SetMask s = unrank(g, k, level - m);
    rows.push_back({m, s, new_shade(Family(g, {s})), static_cast<Int>(shade(last_segment(g, k, m)).size()),
                    Rational(n, n + 2) * Rational(m) + Rational(1)});
  }
  return rows;
}

}  // namespace sperner
