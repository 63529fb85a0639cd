#ifndef TOPGEN_RATIONAL_HPP
#define TOPGEN_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "topgen/errors.hpp"

namespace topgen {

// Exact rational on int64.  All verdict arithmetic in this project is tiny
// (denominators bounded by a few hundred); the __int128 intermediates plus a
// range check make overflow impossible in practice and loud if it ever happens.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n), den(1) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) fail(Errc::SyntaxError, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  static Rat from128(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim) fail(Errc::SyntaxError, "rational overflow");
    Rat r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(d == 0 ? 1 : d);
    if (r.num == 0) r.den = 1;
    return r;
  }

  friend Rat operator+(const Rat& x, const Rat& y) {
    return from128((__int128)x.num * y.den + (__int128)y.num * x.den, (__int128)x.den * y.den);
  }
  friend Rat operator-(const Rat& x, const Rat& y) {
    return from128((__int128)x.num * y.den - (__int128)y.num * x.den, (__int128)x.den * y.den);
  }
  friend Rat operator*(const Rat& x, const Rat& y) {
    return from128((__int128)x.num * y.num, (__int128)x.den * y.den);
  }
  friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
  friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
  friend bool operator<(const Rat& x, const Rat& y) {
    return (__int128)x.num * y.den < (__int128)y.num * x.den;
  }
  friend bool operator<=(const Rat& x, const Rat& y) { return x == y || x < y; }
  friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
  friend bool operator>=(const Rat& x, const Rat& y) { return y <= x; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // parses "n" or "n/d"
  static Rat parse(const std::string& s);
};

}  // namespace topgen

#endif
