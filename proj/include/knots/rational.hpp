#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knots {

// Exact rational on 64-bit components, denominator always >= 1.
// Arithmetic goes through 128-bit intermediates and throws std::overflow_error
// instead of wrapping; every quantity in this project stays far below that.
class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n) {}
  Rat(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  long long floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }
  long long ceil() const { return -(-*this).floor(); }

  Rat operator-() const { return Rat(-num_, den_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rat inverse() const {
    if (num_ == 0) throw std::domain_error("Rat: inverse of zero");
    return Rat(den_, num_);
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Accepts "p", "p/q" with optional leading sign; q must be unsigned.
  static Rat parse(std::string_view text);

 private:
  using i128 = __int128;
  static long long clamp(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
      throw std::overflow_error("Rat: 64-bit overflow");
    return static_cast<long long>(v);
  }
  static Rat make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 an = n < 0 ? -n : n;
    i128 g = gcd128(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rat r;
    r.num_ = clamp(n);
    r.den_ = clamp(d);
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rat Rat::parse(std::string_view text) {
  size_t slash = text.find('/');
  auto to_ll = [](std::string_view v, bool allow_sign) -> long long {
    if (v.empty()) throw std::invalid_argument("Rat: empty number");
    size_t i = 0;
    bool neg = false;
    if (allow_sign && (v[0] == '+' || v[0] == '-')) {
      neg = v[0] == '-';
      i = 1;
    }
    if (i == v.size()) throw std::invalid_argument("Rat: bare sign");
    if (v.size() - i > 18)
      throw std::overflow_error("Rat: literal too long: '" + std::string(v) +
                                "'");
    long long out = 0;
    for (; i < v.size(); ++i) {
      if (v[i] < '0' || v[i] > '9')
        throw std::invalid_argument("Rat: bad digit in '" + std::string(v) + "'");
      out = out * 10 + (v[i] - '0');
    }
    return neg ? -out : out;
  };
  if (slash == std::string_view::npos) return Rat(to_ll(text, true));
  long long p = to_ll(text.substr(0, slash), true);
  long long q = to_ll(text.substr(slash + 1), false);
  return Rat(p, q);
}

}  // namespace knots
