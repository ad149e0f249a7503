#pragma once

// Exact rational numbers over checked 64-bit integers.

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sperner/binomial.hpp"

namespace sperner {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den) { assign(num, den); }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational &a, const Rational &b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ +
                         static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational &a, const Rational &b) {
    return from_wide(static_cast<__int128>(a.num_) * b.den_ -
                         static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational &a, const Rational &b) {
    return from_wide(static_cast<__int128>(a.num_) * b.num_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0) throw std::domain_error("sperner: rational division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_,
                     static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

  Rational &operator+=(const Rational &o) { return *this = *this + o; }
  Rational &operator-=(const Rational &o) { return *this = *this - o; }
  Rational &operator*=(const Rational &o) { return *this = *this * o; }

  friend bool operator==(const Rational &, const Rational &) = default;
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    // Denominators are positive, so cross-multiplication preserves order.
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  int sign() const { return (num_ > 0) - (num_ < 0); }

  /// "p/q", or "p" when the value is an integer.
  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Mixed-number form, e.g. "1 2/3" or "3".
  std::string mixed() const {
    if (den_ == 1) return std::to_string(num_);
    const bool negative = num_ < 0;
    const Int magnitude = negative ? -num_ : num_;
    std::string s = negative ? "-" : "";
    if (magnitude >= den_) s += std::to_string(magnitude / den_) + " ";
    return s + std::to_string(magnitude % den_) + "/" + std::to_string(den_);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &q) {
    return os << q.str();
  }

 private:
  void assign(Int num, Int den) {
    if (den == 0) throw std::domain_error("sperner: zero denominator");
    *this = from_wide(num, den);
  }

  static __int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd_wide(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr __int128 hi = std::numeric_limits<Int>::max();
    constexpr __int128 lo = std::numeric_limits<Int>::min();
    if (num > hi || num < lo || den > hi) detail::overflow("rational arithmetic");
    Rational q;
    q.num_ = static_cast<Int>(num);
    q.den_ = static_cast<Int>(den);
    return q;
  }

  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace sperner
