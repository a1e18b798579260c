#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "fracwave/errors.hpp"

namespace fracwave {

/// Exact rational over 64-bit integers, always stored reduced with a
/// positive denominator. Intermediate products run in 128-bit; anything
/// that cannot be reduced back into 64 bits raises OverflowError rather
/// than silently wrapping.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Parses "n", "n/d" or a plain decimal like "-0.25" (decimals are exact
  /// rationals: digits over a power of ten).
  static Rational parse(const std::string& text);

  friend Rational operator-(const Rational& r) {
    Rational out;
    out.num_ = check_range(-static_cast<__int128>(r.num_));
    out.den_ = r.den_;
    return out;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    const __int128 n = static_cast<__int128>(a.num_) * b.num_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("Rational: division by zero");
    const __int128 n = static_cast<__int128>(a.num_) * b.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.num_;
    return from_wide(n, d);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational pow(int k) const {
    if (k < 0) return Rational(1) / pow(-k);
    Rational out(1);
    Rational base = *this;
    while (k > 0) {
      if (k & 1) out *= base;
      base = (k > 1) ? base * base : base;
      k >>= 1;
    }
    return out;
  }

 private:
  static std::int64_t check_range(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
      throw OverflowError("Rational: 64-bit overflow");
    }
    return static_cast<std::int64_t>(v);
  }

  static Rational from_wide(__int128 n, __int128 d) {
    if (d == 0) throw DomainError("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd_wide(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational out;
    out.num_ = check_range(n);
    out.den_ = check_range(d);
    return out;
  }

  static __int128 gcd_wide(__int128 a, __int128 b) {
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = check_range(-static_cast<__int128>(num_));
      den_ = check_range(-static_cast<__int128>(den_));
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

namespace detail {
inline std::int64_t parse_digits(const std::string& s, const char* what) {
  if (s.empty()) return 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw DomainError(std::string("Rational::parse: bad ") + what + " '" +
                        s + "'");
    }
  }
  return std::stoll(s);
}
}  // namespace detail

inline Rational Rational::parse(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw DomainError("Rational::parse: empty string");

  Rational out;
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    out = Rational(detail::parse_digits(s.substr(0, slash), "numerator"),
                   detail::parse_digits(s.substr(slash + 1), "denominator"));
  } else if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string frac = s.substr(dot + 1);
    if (frac.size() > 18) {
      throw DomainError("Rational::parse: too many decimal digits");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    out = Rational(detail::parse_digits(s.substr(0, dot), "integer part")) +
          Rational(detail::parse_digits(frac, "fraction part"), scale);
  } else {
    out = Rational(detail::parse_digits(s, "integer"));
  }
  return negative ? -out : out;
}

}  // namespace fracwave
