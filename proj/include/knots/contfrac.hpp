#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "knots/rational.hpp"
#include "knots/slope.hpp"

namespace knots {

// Finite continued fraction [a1,...,an] under the convention
//   [a1,...,an] = 1/(a1 + 1/(a2 + ... + 1/an)).
// Internal zero terms are collapsed at construction: [..,a,0,b,..] -> [..,a+b,..].
class ContFrac {
 public:
  explicit ContFrac(std::vector<long long> terms);

  const std::vector<long long>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  long long operator[](size_t i) const { return terms_[i]; }

  bool is_simple() const;  // all terms strictly positive
  ContFrac mirrored() const;  // every term negated

  std::string str() const;
  // Grammar: `[a1,a2,...,an]`, signed integers, whitespace-insensitive.
  static ContFrac parse(std::string_view text);

  friend bool operator==(const ContFrac& a, const ContFrac& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<long long> terms_;
};

// Exact value of the continued fraction. Throws std::domain_error naming the
// offending suffix if some tail evaluates so that a division by zero occurs.
Rat cf_eval(const ContFrac& cf);

// Simple (all terms positive) continued fraction equal in value to [2w, v, 2u].
// Domain: (w = 1, u = -1, |v| >= 2) or (w >= 2, |u| >= 2, |v| >= 1).
ContFrac simple_form(long long w, long long v, long long u);

// Whether two simple continued fractions (first and last terms != 1) present
// equivalent two-bridge links under an orientation-preserving homeomorphism:
// equal lengths and either termwise equal, or a_i = eps*b_{m-i+1} with
// eps = (-1)^(m-1).
bool cf_equivalent(const ContFrac& a, const ContFrac& b);

// One enumerated expansion of a two-bridge fraction: terms all of absolute
// value >= 2 in the subtractive convention, plus the integer base r so that
// the expanded value is f - r; `slope` is the uncalibrated count 2(n+ - n-).
struct Expansion {
  long long base = 0;
  std::vector<long long> terms;
  long long raw_slope = 0;
  bool all_even = false;
};

// All such expansions across both presentations f - floor(f) and f - ceil(f).
std::vector<Expansion> two_bridge_expansions(const Rat& f);

// Boundary slopes of the two-bridge knot with fraction f (denominator odd,
// >= 3): 2(n+ - n-) - 2(n+0 - n-0) over all expansions, the 0-counts taken
// from the unique all-even expansion. Sorted ascending.
std::vector<Slope> two_bridge_boundary_slopes(const Rat& f);

// Same set with the global sign flipped, if needed, so that `calibrate_to`
// is a member; error if neither sign works.
std::vector<Slope> two_bridge_boundary_slopes(const Rat& f,
                                              const Slope& calibrate_to);

// Linking number of the two components of the 4-plat closure of cf
// (denominator of the value must be even). Convention: linking_number of [2]
// is +1. `diagram` is the half signed count of inter-component crossings,
// `homological` the signed count of crossings where the first component
// passes over the second; the two agree for any diagram.
struct LinkingCounts {
  long long diagram = 0;
  long long homological = 0;
};
LinkingCounts linking_counts(const ContFrac& cf);
long long linking_number(const ContFrac& cf);

// Closed-form reference: sum over odd i in (0, alpha) of (-1)^floor(i*beta/alpha)
// for the normalized fraction beta/alpha in (0, 1).
long long linking_number_reference(const Rat& f);

}  // namespace knots
