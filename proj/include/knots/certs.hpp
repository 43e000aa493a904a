#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knots {

// Boundary-slope certificate letters: C (A-polynomial), K (Kabaya),
// L (longitude), M (two-bridge/Montesinos enumeration), T (toroidal).
class CertSet {
 public:
  CertSet() = default;

  static CertSet parse(std::string_view letters) {
    CertSet out;
    for (char c : letters) out.add(c);
    return out;
  }

  void add(char c) {
    int i = index(c);
    if (i < 0)
      throw std::invalid_argument(std::string("CertSet: unknown certificate '") +
                                  c + "' (expected C, K, L, M or T)");
    bits_ |= (1 << i);
  }

  bool has(char c) const {
    int i = index(c);
    return i >= 0 && (bits_ & (1 << i));
  }
  bool empty() const { return bits_ == 0; }

  CertSet united(const CertSet& other) const {
    CertSet out;
    out.bits_ = bits_ | other.bits_;
    return out;
  }

  std::string str() const {
    std::string s;
    for (char c : {'C', 'K', 'L', 'M', 'T'})
      if (has(c)) s += c;
    return s;
  }

  friend bool operator==(const CertSet& a, const CertSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  static int index(char c) {
    switch (c) {
      case 'C': return 0;
      case 'K': return 1;
      case 'L': return 2;
      case 'M': return 3;
      case 'T': return 4;
      default: return -1;
    }
  }
  unsigned bits_ = 0;
};

}  // namespace knots
