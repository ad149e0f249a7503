#pragma once

// The difference functions
//   D(n,r)    = C(n,r-1) - C(n,r)
//   D*(n,r,k) = C(n,r-1) - k/(k+1) C(n,r)
// (both 0 when r > n) and exhaustive checks of the inequalities and
// identities they satisfy.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sperner/binomial.hpp"
#include "sperner/check_report.hpp"
#include "sperner/rational.hpp"

namespace sperner {

inline Int D(Int n, Int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("sperner: D(n,r) needs n, r >= 1");
  if (r > n) return 0;
  return detail::checked_sub(binomial(n, r - 1), binomial(n, r));
}

inline Rational D_star(Int n, Int r, Int k) {
  if (n < 1 || r < 1 || k < 1)
    throw std::invalid_argument("sperner: D*(n,r,k) needs n, r, k >= 1");
  if (r > n) return 0;
  return Rational(binomial(n, r - 1)) - Rational(k, k + 1) * Rational(binomial(n, r));
}

/// sum_{i=0}^{k} C(r+i, i).
inline Int hockey_stick(Int r, Int k) {
  if (r < 0 || k < 0) throw std::invalid_argument("sperner: hockey_stick needs r, k >= 0");
  Int s = 0;
  for (Int i = 0; i <= k; ++i) s = detail::checked_add(s, binomial(r + i, i));
  return s;
}

enum class LemmaId { obs3_2, lem3_3, lem3_4, lem3_5, lem3_6, lem3_7, lem3_10, lem3_11, cor3_12, lem3_13 };

struct LemmaInfo {
  LemmaId id;
  std::string_view key;
  std::string_view claim;
  int default_max;
};

inline constexpr std::array<LemmaInfo, 10> kLemmas{{
    {LemmaId::obs3_2, "3.2", "D(n,r) = C(n,r-1)(2r-1-n)/r, 1<=r<=n<=max", 40},
    {LemmaId::lem3_3, "3.3", "sign D(n,r) = sign(2r-(n+1)), 1<=r<=n<=max", 40},
    {LemmaId::lem3_4, "3.4", "D(i,r) >= D(j-2+r,r), 2<=j<=max, r<=j-1, r<=i<=j-2+r", 20},
    {LemmaId::lem3_5, "3.5", "sum_{i=0}^k C(r+i,i) = C(r+k+1,k), 0<=r,k<=max", 30},
    {LemmaId::lem3_6, "3.6", "sum_{r=1}^j D(j-2+r,r) = 1, 2<=j<=max", 30},
    {LemmaId::lem3_7, "3.7", "D(i,ceil(n/2)+1) >= 2, odd 3<=n<=max, ceil(n/2)+1<=i<=n", 25},
    {LemmaId::lem3_10, "3.10", "D*(i,j,k) - D*(i+1,j,k) >= 1/2, 2<=k<=max, 2j-1<=i<=2k-1", 20},
    {LemmaId::lem3_11, "3.11", "D*(i,r,k) >= D*(k-1+r,r,k), 2<=k<=max, r<=k-1, r<=i<=k-1+r", 20},
    {LemmaId::cor3_12, "3.12", "D*(k-1+r,r,k) < 0, 2<=k<=max, r<=k-1", 20},
    {LemmaId::lem3_13, "3.13", "sum_{r=1}^k D*(k-1+r,r,k) = k/(k+1) >= 2/3, 2<=k<=max", 20},
}};

inline const LemmaInfo &lemma_info(LemmaId id) {
  for (const auto &l : kLemmas)
    if (l.id == id) return l;
  throw std::invalid_argument("sperner: unknown lemma");
}

inline std::optional<LemmaId> parse_lemma_id(std::string_view key) {
  for (const auto &l : kLemmas)
    if (l.key == key) return l.id;
  return std::nullopt;
}

namespace detail {

inline std::string tuple_str(std::initializer_list<std::pair<const char *, Int>> kv) {
  std::string s = "(";
  for (const auto &[name, v] : kv) {
    if (s.size() > 1) s += ", ";
    s += std::string(name) + "=" + std::to_string(v);
  }
  return s + ")";
}

}  // namespace detail

/// Sweeps one lemma over [.., max] with exact arithmetic; max <= 0 picks the default range.
inline CheckReport check_lemma(LemmaId id, int max = 0) {
  const LemmaInfo &info = lemma_info(id);
  if (max <= 0) max = info.default_max;
  CheckReport rep{std::string(info.key), std::string(info.claim)};
  using detail::tuple_str;

  switch (id) {
    case LemmaId::obs3_2:
      for (Int n = 1; n <= max; ++n)
        for (Int r = 1; r <= n; ++r)
          rep.record(Rational(D(n, r)) == Rational(binomial(n, r - 1)) * Rational(2 * r - 1 - n, r),
                     tuple_str({{"n", n}, {"r", r}}));
      break;
    case LemmaId::lem3_3:
      for (Int n = 1; n <= max; ++n)
        for (Int r = 1; r <= n; ++r) {
          const Int d = D(n, r), side = 2 * r - (n + 1);
          rep.record((d > 0) == (side > 0) && (d == 0) == (side == 0) && (d < 0) == (side < 0),
                     tuple_str({{"n", n}, {"r", r}, {"D", d}}));
        }
      break;
    case LemmaId::lem3_4:
      for (Int j = 2; j <= max; ++j)
        for (Int r = 1; r <= j - 1; ++r)
          for (Int i = r; i <= j - 2 + r; ++i)
            rep.record(D(i, r) >= D(j - 2 + r, r), tuple_str({{"i", i}, {"j", j}, {"r", r}}));
      break;
    case LemmaId::lem3_5:
      for (Int r = 0; r <= max; ++r)
        for (Int k = 0; k <= max; ++k)
          rep.record(hockey_stick(r, k) == binomial(r + k + 1, k), tuple_str({{"r", r}, {"k", k}}));
      break;
    case LemmaId::lem3_6:
      for (Int j = 2; j <= max; ++j) {
        Int s = 0;
        for (Int r = 1; r <= j; ++r) s = detail::checked_add(s, D(j - 2 + r, r));
        rep.record(s == 1, tuple_str({{"j", j}, {"sum", s}}));
      }
      break;
    case LemmaId::lem3_7:
      for (Int n = 3; n <= max; n += 2) {
        const Int r = (n + 1) / 2 + 1;
        for (Int i = r; i <= n; ++i) rep.record(D(i, r) >= 2, tuple_str({{"n", n}, {"i", i}}));
      }
      break;
    case LemmaId::lem3_10:
      for (Int k = 2; k <= max; ++k)
        for (Int j = 1; 2 * j - 1 <= 2 * k - 1; ++j)
          for (Int i = 2 * j - 1; i <= 2 * k - 1; ++i)
            rep.record(D_star(i, j, k) - D_star(i + 1, j, k) >= Rational(1, 2),
                       tuple_str({{"i", i}, {"j", j}, {"k", k}}));
      break;
    case LemmaId::lem3_11:
      for (Int k = 2; k <= max; ++k)
        for (Int r = 1; r <= k - 1; ++r)
          for (Int i = r; i <= k - 1 + r; ++i)
            rep.record(D_star(i, r, k) >= D_star(k - 1 + r, r, k),
                       tuple_str({{"i", i}, {"r", r}, {"k", k}}));
      break;
    case LemmaId::cor3_12:
      for (Int k = 2; k <= max; ++k)
        for (Int r = 1; r <= k - 1; ++r)
          rep.record(D_star(k - 1 + r, r, k).sign() < 0, tuple_str({{"r", r}, {"k", k}}));
      break;
    case LemmaId::lem3_13:
      for (Int k = 2; k <= max; ++k) {
        Rational s;
        for (Int r = 1; r <= k; ++r) s += D_star(k - 1 + r, r, k);
        rep.record(s == Rational(k, k + 1) && s >= Rational(2, 3),
                   tuple_str({{"k", k}}) + " sum=" + s.str());
      }
      break;
  }
  return rep;
}

}  // namespace sperner
