#pragma once

// Checked 64-bit binomial coefficients. Overflow is always an exception.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace sperner {

using Int = std::int64_t;

namespace detail {

[[noreturn]] inline void overflow(const char *what) {
  throw std::overflow_error(std::string("sperner: 64-bit overflow in ") + what);
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("multiplication");
  return r;
}

// C(n,k) as __int128, or -1 once the running value exceeds `cap`.
// Every prefix product C(n-k+i, i) is exact, so the running value never
// decreases and the early exit is sound.
inline __int128 binomial_capped(Int n, Int k, __int128 cap) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (Int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return -1;
  }
  return r;
}

}  // namespace detail

/// C(n,k) for n >= 0; 0 when k < 0 or k > n. Throws std::overflow_error
/// if the value does not fit in a signed 64-bit integer.
inline Int binomial(Int n, Int k) {
  if (n < 0) throw std::invalid_argument("sperner: binomial with negative n");
  const __int128 r =
      detail::binomial_capped(n, k, std::numeric_limits<Int>::max());
  if (r < 0) detail::overflow("binomial");
  return static_cast<Int>(r);
}

/// True iff C(n,k) <= bound, without overflowing for huge n.
inline bool binomial_at_most(Int n, Int k, Int bound) {
  return detail::binomial_capped(n, k, bound) >= 0;
}

}  // namespace sperner
