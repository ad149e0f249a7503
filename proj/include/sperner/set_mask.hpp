#pragma once

// Subsets of {1..n} as 64-bit masks. Element i lives in bit i-1.

#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sperner {

inline constexpr int kMaxGround = 60;

class GroundSize {
 public:
  constexpr explicit GroundSize(int n) : n_(n) {
    if (n < 1 || n > kMaxGround)
      throw std::out_of_range("sperner: ground size must be in [1, 60], got " +
                              std::to_string(n));
  }
  constexpr int n() const { return n_; }
  constexpr std::uint64_t full_bits() const { return (std::uint64_t{1} << n_) - 1; }
  friend bool operator==(GroundSize, GroundSize) = default;

 private:
  int n_;
};

class SetMask {
 public:
  constexpr SetMask() = default;
  constexpr explicit SetMask(std::uint64_t bits) : bits_(bits) {}

  /// Builds a set from 1-indexed elements.
  static SetMask of(std::initializer_list<int> elements) {
    std::uint64_t bits = 0;
    for (int e : elements) {
      if (e < 1 || e > kMaxGround)
        throw std::out_of_range("sperner: element out of range: " + std::to_string(e));
      bits |= std::uint64_t{1} << (e - 1);
    }
    return SetMask(bits);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const {
    return element >= 1 && element <= 64 && ((bits_ >> (element - 1)) & 1u);
  }
  constexpr bool subset_of(SetMask o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool meets(SetMask o) const { return (bits_ & o.bits_) != 0; }
  /// Largest element, 0 for the empty set.
  constexpr int max_element() const { return 64 - std::countl_zero(bits_); }
  constexpr bool fits(GroundSize g) const { return (bits_ & ~g.full_bits()) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  friend constexpr SetMask operator|(SetMask a, SetMask b) { return SetMask(a.bits_ | b.bits_); }
  friend constexpr SetMask operator&(SetMask a, SetMask b) { return SetMask(a.bits_ & b.bits_); }
  friend constexpr SetMask operator-(SetMask a, SetMask b) { return SetMask(a.bits_ & ~b.bits_); }
  friend constexpr SetMask operator^(SetMask a, SetMask b) { return SetMask(a.bits_ ^ b.bits_); }

  friend constexpr bool operator==(SetMask, SetMask) = default;
  // Numeric order on masks. Restricted to one cardinality this is the
  // squashed (colex) order.
  friend constexpr std::strong_ordering operator<=>(SetMask a, SetMask b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Orders by cardinality first, then squashed order inside a level.
struct RankThenSquash {
  constexpr bool operator()(SetMask a, SetMask b) const {
    const int sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : a.bits() < b.bits();
  }
};

inline SetMask complement(SetMask x, GroundSize g) {
  if (!x.fits(g)) throw std::invalid_argument("sperner: set exceeds ground size");
  return SetMask(~x.bits() & g.full_bits());
}

/// x and y are independent iff neither contains the other. Equal sets are not.
constexpr bool independent(SetMask x, SetMask y) {
  return !x.subset_of(y) && !y.subset_of(x);
}

constexpr bool comparable(SetMask x, SetMask y) { return !independent(x, y); }

/// "{1,3,4}"; "{}" for the empty set.
inline std::string format_set(SetMask x) {
  std::string s = "{";
  bool first = true;
  for (int e : x.elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

/// Juxtaposed digits, e.g. "134", for ground sizes up to 9.
inline std::string format_compact(SetMask x) {
  std::string s;
  for (int e : x.elements()) {
    if (e > 9) throw std::invalid_argument("sperner: compact form needs elements <= 9");
    s += static_cast<char>('0' + e);
  }
  return s;
}

/// Accepts "{1,3,4}", "{}" and, when n <= 9, the compact "134".
inline SetMask parse_set(std::string_view text, GroundSize g) {
  auto fail = [&](const std::string &why) -> SetMask {
    throw std::invalid_argument("sperner: bad set '" + std::string(text) + "': " + why);
  };
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view t = text.substr(b, e - b);
  if (t.empty()) return fail("empty text");

  std::uint64_t bits = 0;
  auto add = [&](int element) {
    if (element < 1 || element > g.n())
      fail("element " + std::to_string(element) + " outside 1.." + std::to_string(g.n()));
    const std::uint64_t bit = std::uint64_t{1} << (element - 1);
    if (bits & bit) fail("repeated element " + std::to_string(element));
    bits |= bit;
  };

  if (t.front() == '{') {
    if (t.back() != '}') return fail("missing '}'");
    const std::string_view body = t.substr(1, t.size() - 2);
    std::size_t i = 0;
    bool expect_number = true, any = false;
    while (i < body.size()) {
      const char c = body[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        if (!expect_number) return fail("missing ','");
        int v = 0;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
          v = v * 10 + (body[i] - '0');
          if (v > 1000) return fail("element too large");
          ++i;
        }
        add(v);
        expect_number = false;
        any = true;
      } else if (c == ',') {
        if (expect_number) return fail("unexpected ','");
        expect_number = true;
        ++i;
      } else {
        return fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (any && expect_number) return fail("trailing ','");
    return SetMask(bits);
  }

  if (g.n() > 9) return fail("compact form requires n <= 9");
  for (char c : t) {
    if (c < '1' || c > '9') return fail(std::string("unexpected character '") + c + "'");
    add(c - '0');
  }
  return SetMask(bits);
}

}  // namespace sperner
