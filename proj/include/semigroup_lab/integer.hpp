#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace semigroup_lab {

/// Element type for generators, elements and coefficients.
using Int = __int128;

/// Wider accumulator used where a product of several Int values is formed.
using Wide = __int128;

inline constexpr Int kIntMax = std::numeric_limits<Int>::max();

inline std::string to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // work on the negative side so the minimum value prints correctly
  Int t = neg ? v : -v;
  std::string out;
  while (t != 0) {
    int digit = -static_cast<int>(t % 10);
    out.push_back(static_cast<char>('0' + digit));
    t /= 10;
  }
  if (neg) out.push_back('-');
  return std::string(out.rbegin(), out.rend());
}

inline Int parse_int(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("bad integer: " + text);
  Int v = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer: " + text);
    if (__builtin_mul_overflow(v, Int{10}, &v) ||
        __builtin_add_overflow(v, Int{c - '0'}, &v)) {
      throw std::overflow_error("integer out of range: " + text);
    }
  }
  return neg ? -v : v;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("multiplication overflow");
  return r;
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("addition overflow");
  return r;
}

inline Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Floor division for a positive divisor.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// Nonnegative residue for a positive modulus.
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m, assuming gcd(a, m) == 1 and m >= 1.
inline Int mod_inverse(Int a, Int m) {
  if (m == 1) return 0;
  Int old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod(old_s, m);
}

inline std::ostream& operator<<(std::ostream& os, Int v) { return os << to_string(v); }

}  // namespace semigroup_lab
