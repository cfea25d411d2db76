#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphfair {

// Exact rational number with canonical representation: gcd(num, den) == 1 and
// den > 0 at all times. All fairness thresholds in this library are compared
// exactly through this type; no floating point is involved anywhere.
//
// Arithmetic runs through __int128 intermediates and throws std::overflow_error
// if a reduced result falls outside int64. Instance values are small integers
// or small fractions, so overflow indicates a misuse, not a working regime.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    assign(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross multiplication preserves order.
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  // Accepts "p" and "p/q" with q > 0; does not require lowest terms (the
  // instance reader applies its own canonicality policy before calling this).
  static std::optional<Rational> parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::int64_t num = 0;
    if (!parse_int(num_part, num)) return std::nullopt;
    if (slash == std::string_view::npos) return Rational(num);
    std::int64_t den = 0;
    if (!parse_int(text.substr(slash + 1), den) || den <= 0) return std::nullopt;
    return Rational(num, den);
  }

 private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(i128 num, i128 den) {
    Rational r;
    r.assign(num, den);
    return r;
  }

  void assign(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    i128 g = gcd128(num, den);
    num /= g;
    den /= g;
    constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
    constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();
    if (num > kMax || num < kMin || den > kMax) throw std::overflow_error("Rational: value out of range");
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  static bool parse_int(std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-') {
      neg = true;
      i = 1;
      if (s.size() == 1) return false;
    }
    i128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
      v = v * 10 + (s[i] - '0');
      if (v > i128(std::numeric_limits<std::int64_t>::max()) + 1) return false;
    }
    if (neg) v = -v;
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) return false;
    out = static_cast<std::int64_t>(v);
    return true;
  }

  std::int64_t num_{0};
  std::int64_t den_{1};
};

}  // namespace graphfair
