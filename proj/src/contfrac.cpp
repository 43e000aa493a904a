#include "knots/contfrac.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace knots {

ContFrac::ContFrac(std::vector<long long> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("ContFrac: empty");
  // Collapse internal zeros: [.., a, 0, b, ..] -> [.., a+b, ..], repeatedly.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 2 < terms_.size(); ++i) {
      if (terms_[i + 1] == 0) {
        terms_[i] += terms_[i + 2];
        terms_.erase(terms_.begin() + i + 1, terms_.begin() + i + 3);
        changed = true;
        break;
      }
    }
  }
}

bool ContFrac::is_simple() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](long long t) { return t > 0; });
}

ContFrac ContFrac::mirrored() const {
  std::vector<long long> t(terms_);
  for (auto& x : t) x = -x;
  return ContFrac(std::move(t));
}

std::string ContFrac::str() const {
  std::string s = "[";
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(terms_[i]);
  }
  return s + "]";
}

ContFrac ContFrac::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']')
    throw std::invalid_argument("ContFrac: expected [a1,a2,...]");
  std::string body = compact.substr(1, compact.size() - 2);
  if (body.empty()) throw std::invalid_argument("ContFrac: empty list");
  std::vector<long long> terms;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos
                                           ? std::string::npos
                                           : comma - pos);
    Rat r = Rat::parse(tok);
    if (!r.is_integer())
      throw std::invalid_argument("ContFrac: non-integer term '" + tok + "'");
    terms.push_back(r.num());
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ContFrac(std::move(terms));
}

Rat cf_eval(const ContFrac& cf) {
  const auto& a = cf.terms();
  Rat val(0);  // value of the empty tail
  for (size_t i = a.size(); i-- > 0;) {
    Rat denom = Rat(a[i]) + val;
    if (denom.is_zero()) {
      std::string suffix = "[";
      for (size_t j = i; j < a.size(); ++j) {
        if (j > i) suffix += ",";
        suffix += std::to_string(a[j]);
      }
      suffix += "]";
      throw std::domain_error("cf_eval: division by zero at suffix " + suffix);
    }
    val = denom.inverse();
  }
  return val;
}

ContFrac simple_form(long long w, long long v, long long u) {
  auto in_domain = (w == 1 && u == -1 && (v >= 2 || v <= -2)) ||
                   (w >= 2 && (u >= 2 || u <= -2) && v != 0);
  if (!in_domain)
    throw std::invalid_argument(
        "simple_form: (w,v,u) outside (w=1, u=-1, |v|>=2) or (w>=2, |u|>=2, "
        "|v|>=1)");
  std::vector<long long> out;
  if (v >= 1 && u >= 1) {
    out = {2 * w, v, 2 * u};
  } else if (v == 1 && u <= -2) {
    out = {2 * w + 1, -2 * u - 1};
  } else if (v >= 2 && u == -1) {  // w = 1
    out = {2, v - 1, 2};
  } else if (v >= 2 && u <= -2) {
    out = {2 * w, v - 1, 1, -2 * u - 1};
  } else if (v == -1 && u >= 2) {  // w >= 2
    out = {2 * w - 2, 1, 2 * u - 2};
  } else if (v == -2 && u >= 2) {
    out = {2 * w - 1, 2, 2 * u - 1};
  } else if (v <= -3 && u >= 2) {
    out = {2 * w - 1, 1, -v - 2, 1, 2 * u - 1};
  } else if (v == -1 && u <= -2) {
    out = {2 * w - 1, -2 * u + 1};
  } else if (v <= -2 && u == -1) {  // w = 1
    out = {1, 1, -v - 1, 2};
  } else if (v <= -2 && u <= -2) {
    out = {2 * w - 1, 1, -v - 1, -2 * u};
  } else {
    throw std::logic_error("simple_form: unmatched case");
  }
  return ContFrac(std::move(out));
}

bool cf_equivalent(const ContFrac& a, const ContFrac& b) {
  auto check = [](const ContFrac& c, const char* which) {
    if (!c.is_simple())
      throw std::invalid_argument(std::string("cf_equivalent: ") + which +
                                  " is not simple (all terms positive)");
    if (c[0] == 1 || c[c.size() - 1] == 1)
      throw std::invalid_argument(std::string("cf_equivalent: ") + which +
                                  " has a boundary term equal to 1");
  };
  check(a, "first argument");
  check(b, "second argument");
  if (a.size() != b.size()) return false;
  const size_t m = a.size();
  if (a.terms() == b.terms()) return true;
  long long eps = (m % 2 == 1) ? 1 : -1;
  for (size_t i = 0; i < m; ++i)
    if (a[i] != eps * b[m - 1 - i]) return false;
  return true;
}

// --- two-bridge expansion enumeration -------------------------------------

namespace {

// All subtractive-convention expansions of t in (-1,1)\{0} with |terms| >= 2:
// t = 1/(b1 - 1/(b2 - ... - 1/bk)). Memoized on the residue.
using ExpList = std::vector<std::vector<long long>>;

const ExpList& expand(const Rat& t, std::map<std::pair<long long, long long>,
                                             ExpList>& memo) {
  auto key = std::make_pair(t.num(), t.den());
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  ExpList out;
  Rat c = t.inverse();
  std::vector<long long> cands;
  if (c.is_integer())
    cands = {c.num()};
  else
    cands = {c.floor(), c.ceil()};
  for (long long b : cands) {
    if (b > -2 && b < 2) continue;
    Rat residue = Rat(b) - c;  // value of the remaining tail
    if (residue.is_zero()) {
      out.push_back({b});
      continue;
    }
    for (const auto& rest : expand(residue, memo)) {
      std::vector<long long> e;
      e.reserve(rest.size() + 1);
      e.push_back(b);
      e.insert(e.end(), rest.begin(), rest.end());
      out.push_back(std::move(e));
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

Expansion make_expansion(long long base, std::vector<long long> terms) {
  Expansion e;
  e.base = base;
  e.all_even = true;
  long long plus = 0, minus = 0;
  for (long long t : terms) {
    if (t > 0)
      ++plus;
    else
      ++minus;
    if (t % 2 != 0) e.all_even = false;
  }
  e.raw_slope = 2 * (plus - minus);
  e.terms = std::move(terms);
  return e;
}

}  // namespace

std::vector<Expansion> two_bridge_expansions(const Rat& f) {
  if (f.den() < 2)
    throw std::invalid_argument(
        "two_bridge_expansions: integer fraction is not a two-bridge link");
  std::map<std::pair<long long, long long>, ExpList> memo;
  std::vector<Expansion> out;
  long long fl = f.floor();
  for (long long base : {fl, fl + 1}) {
    Rat t = f - Rat(base);
    for (const auto& terms : expand(t, memo))
      out.push_back(make_expansion(base, terms));
  }
  return out;
}

std::vector<Slope> two_bridge_boundary_slopes(const Rat& f) {
  if (f.den() % 2 == 0)
    throw std::invalid_argument(
        "two_bridge_boundary_slopes: even denominator is a two-bridge link, "
        "not a knot (see the families module)");
  if (f.den() < 3)
    throw std::invalid_argument(
        "two_bridge_boundary_slopes: denominator must be >= 3");
  auto exps = two_bridge_expansions(f);
  const Expansion* even = nullptr;
  for (const auto& e : exps) {
    if (!e.all_even) continue;
    if (even)
      throw std::logic_error(
          "two_bridge_boundary_slopes: multiple all-even expansions");
    even = &e;
  }
  if (!even)
    throw std::logic_error(
        "two_bridge_boundary_slopes: no all-even expansion found");
  std::set<long long> values;
  for (const auto& e : exps) values.insert(e.raw_slope - even->raw_slope);
  std::vector<Slope> out;
  for (long long v : values) out.emplace_back(v);
  return out;
}

std::vector<Slope> two_bridge_boundary_slopes(const Rat& f,
                                              const Slope& calibrate_to) {
  auto slopes = two_bridge_boundary_slopes(f);
  auto has = [&](const Slope& s) {
    return std::find(slopes.begin(), slopes.end(), s) != slopes.end();
  };
  if (has(calibrate_to)) return slopes;
  std::vector<Slope> flipped;
  for (auto it = slopes.rbegin(); it != slopes.rend(); ++it)
    flipped.push_back(it->mirror());
  if (std::find(flipped.begin(), flipped.end(), calibrate_to) != flipped.end())
    return flipped;
  throw std::invalid_argument(
      "two_bridge_boundary_slopes: calibration slope " + calibrate_to.str() +
      " is not a boundary slope under either sign");
}

// --- linking number from the 4-plat diagram --------------------------------

namespace {

struct Crossing {
  int upper_arc;  // arc occupying the upper row before the crossing
  int lower_arc;
  int handedness;  // geometric crossing sign for two rightward strands
};

// Value-preserving rewrite to an even number of twist regions:
// [..., a] -> [..., a-1, 1] and [..., a, 1] -> [..., a+1].
std::vector<long long> even_length_terms(const ContFrac& cf) {
  std::vector<long long> t = cf.terms();
  if (t.size() % 2 == 1) {
    long long last = t.back();
    if (last == 1) {
      t.pop_back();
      t.back() += 1;
    } else {
      t.back() -= 1;
      t.push_back(1);
    }
    if (t.back() == 0 || (t.size() >= 2 && t[t.size() - 2] == 0))
      throw std::logic_error("even_length_terms: rewrite produced a zero term");
  }
  return t;
}

struct PlatDiagram {
  std::vector<Crossing> crossings;
  std::array<int, 4> exit_row;   // exit_row[arc] = row at the right end
  std::array<int, 4> component;  // 0 or 1 per arc
  std::array<int, 4> direction;  // +1 left-to-right, -1 right-to-left
  int component_count = 0;
};

PlatDiagram build_plat(const ContFrac& cf) {
  PlatDiagram d;
  std::array<int, 4> occupant = {0, 1, 2, 3};
  auto terms = even_length_terms(cf);
  for (size_t i = 0; i < terms.size(); ++i) {
    int upper_row = (i % 2 == 0) ? 1 : 2;
    int h = (terms[i] > 0 ? 1 : -1) * (upper_row == 1 ? -1 : 1);
    long long count = terms[i] > 0 ? terms[i] : -terms[i];
    for (long long k = 0; k < count; ++k) {
      d.crossings.push_back(
          {occupant[upper_row], occupant[upper_row + 1], h});
      std::swap(occupant[upper_row], occupant[upper_row + 1]);
    }
  }
  for (int row = 0; row < 4; ++row) d.exit_row[occupant[row]] = row;

  // Closure arcs: left joins rows (0,1) and (2,3); right joins (0,3) and (1,2).
  std::array<int, 4> arc_at_right;
  for (int arc = 0; arc < 4; ++arc) arc_at_right[d.exit_row[arc]] = arc;
  auto left_partner = [](int row) { return row ^ 1; };
  auto right_partner = [](int row) {
    switch (row) {
      case 0: return 3;
      case 3: return 0;
      case 1: return 2;
      default: return 1;
    }
  };
  d.component.fill(-1);
  d.direction.fill(0);
  for (int start = 0; start < 4; ++start) {
    if (d.component[start] != -1) continue;
    int comp = d.component_count++;
    int arc = start;
    bool forward = true;  // entering the arc at its left endpoint
    while (true) {
      d.component[arc] = comp;
      d.direction[arc] = forward ? 1 : -1;
      int next_arc, next_forward;
      if (forward) {
        int row = right_partner(d.exit_row[arc]);
        next_arc = arc_at_right[row];
        next_forward = false;  // traverse partner right-to-left
      } else {
        int row = left_partner(arc);
        next_arc = row;  // arcs are indexed by their left row
        next_forward = true;
      }
      if (next_arc == start && next_forward) break;
      arc = next_arc;
      forward = next_forward;
    }
  }
  return d;
}

}  // namespace

LinkingCounts linking_counts(const ContFrac& cf) {
  Rat value = cf_eval(cf);
  if (value.den() % 2 != 0)
    throw std::invalid_argument(
        "linking_number: odd denominator is a knot, no linking number");
  PlatDiagram d = build_plat(cf);
  if (d.component_count != 2)
    throw std::logic_error("linking_number: plat closure is not a 2-component "
                           "link (internal error)");
  long long half_sum = 0;
  long long over_count = 0;
  for (const auto& c : d.crossings) {
    if (d.component[c.upper_arc] == d.component[c.lower_arc]) continue;
    int sign =
        c.handedness * d.direction[c.upper_arc] * d.direction[c.lower_arc];
    half_sum += sign;
    // The strand moving down through the crossing is over iff handedness = +1.
    int over_arc = (c.handedness == 1) ? c.upper_arc : c.lower_arc;
    if (d.component[over_arc] == 0) over_count += sign;
  }
  if (half_sum % 2 != 0)
    throw std::logic_error("linking_number: odd inter-component crossing sum");
  return {half_sum / 2, over_count};
}

long long linking_number(const ContFrac& cf) {
  return linking_counts(cf).diagram;
}

long long linking_number_reference(const Rat& f) {
  long long alpha = f.den();
  if (alpha % 2 != 0 || alpha < 2)
    throw std::invalid_argument("linking_number_reference: denominator must "
                                "be even");
  long long beta = ((f.num() % alpha) + alpha) % alpha;
  long long sum = 0;
  for (long long i = 1; i < alpha; i += 2) {
    long long fl = (i * beta) / alpha;  // i*beta > 0
    sum += (fl % 2 == 0) ? 1 : -1;
  }
  return sum;
}

}  // namespace knots
