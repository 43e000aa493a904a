#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "knots/rational.hpp"

namespace knots {

// A surgery or boundary slope: a rational p/q in lowest terms with q > 0,
// or the meridian, stored as exactly (1, 0). The meridian is excluded from
// order comparisons and interval membership.
class Slope {
 public:
  Slope() = default;
  Slope(long long n) : p_(n), q_(1) {}
  explicit Slope(const Rat& r) : p_(r.num()), q_(r.den()) {}

  static Slope normalize(long long p, long long q);
  static Slope meridian() {
    Slope s;
    s.p_ = 1;
    s.q_ = 0;
    return s;
  }

  long long numerator() const { return p_; }
  long long denominator() const { return q_; }
  bool is_meridian() const { return q_ == 0; }
  bool is_integer() const { return q_ == 1; }

  Rat to_rat() const {
    require_finite("to_rat");
    return Rat(p_, q_);
  }

  long long floor() const {
    require_finite("floor");
    return Rat(p_, q_).floor();
  }
  long long ceil() const {
    require_finite("ceil");
    return Rat(p_, q_).ceil();
  }
  std::pair<long long, long long> floor_ceil() const {
    return {floor(), ceil()};
  }

  Slope mirror() const {
    if (is_meridian()) return *this;
    Slope s;
    s.p_ = -p_;
    s.q_ = q_;
    return s;
  }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
  friend bool operator<(const Slope& a, const Slope& b) {
    a.require_finite("order");
    b.require_finite("order");
    return Rat(a.p_, a.q_) < Rat(b.p_, b.q_);
  }
  friend bool operator>(const Slope& a, const Slope& b) { return b < a; }
  friend bool operator<=(const Slope& a, const Slope& b) { return !(b < a); }
  friend bool operator>=(const Slope& a, const Slope& b) { return !(a < b); }

  std::string str() const {
    if (is_meridian()) return "1/0";
    std::string s = std::to_string(p_);
    if (q_ != 1) s += "/" + std::to_string(q_);
    return s;
  }

  // Grammar: `p/q` with optional sign on p, plain integers, `1/0` meridian.
  // Rejects 0/0 and signed denominators.
  static Slope parse(std::string_view text);

 private:
  void require_finite(const char* op) const {
    if (is_meridian())
      throw std::domain_error(std::string("Slope: meridian has no ") + op);
  }
  long long p_ = 0;
  long long q_ = 1;
};

enum class TagKind { Toroidal, Seifert, CyclicFinite, Unclassified };

inline const char* tag_name(TagKind k) {
  switch (k) {
    case TagKind::Toroidal: return "toroidal";
    case TagKind::Seifert: return "seifert";
    case TagKind::CyclicFinite: return "cyclic-finite";
    case TagKind::Unclassified: return "unclassified";
  }
  return "?";
}

// NIT: non-integral or toroidal. Meridian rejected.
inline bool is_nit(const Slope& s, bool is_toroidal) {
  if (s.is_meridian()) throw std::domain_error("is_nit: meridian rejected");
  return !s.is_integer() || is_toroidal;
}

// Closed rational interval [lo, hi]; endpoints non-meridian.
struct SlopeInterval {
  Slope lo, hi;
  SlopeInterval(Slope l, Slope h) : lo(l), hi(h) {
    if (lo.is_meridian() || hi.is_meridian())
      throw std::domain_error("SlopeInterval: meridian endpoint");
    if (hi < lo) throw std::invalid_argument("SlopeInterval: hi < lo");
  }
  bool contains(const Slope& s) const { return lo <= s && s <= hi; }
};

inline Slope Slope::normalize(long long p, long long q) {
  if (p == 0 && q == 0)
    throw std::invalid_argument("Slope: 0/0 is not a slope");
  if (q == 0) return meridian();
  if (q < 0) {
    p = -p;
    q = -q;
  }
  long long g = std::gcd(p < 0 ? -p : p, q);
  Slope s;
  s.p_ = p / g;
  s.q_ = q / g;
  return s;
}

inline Slope Slope::parse(std::string_view text) {
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    Rat r = Rat::parse(text);
    if (!r.is_integer()) throw std::invalid_argument("Slope: bad literal");
    return Slope(r.num());
  }
  std::string_view ns = text.substr(0, slash);
  std::string_view ds = text.substr(slash + 1);
  if (!ds.empty() && (ds[0] == '+' || ds[0] == '-'))
    throw std::invalid_argument("Slope: signed denominator in '" +
                                std::string(text) + "'");
  Rat n = Rat::parse(ns);
  if (!n.is_integer()) throw std::invalid_argument("Slope: bad numerator");
  Rat d = Rat::parse(ds);
  if (!d.is_integer()) throw std::invalid_argument("Slope: bad denominator");
  return normalize(n.num(), d.num());
}

}  // namespace knots
