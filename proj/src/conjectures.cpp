#include "knots/conjectures.hpp"

#include <algorithm>
#include <stdexcept>

namespace knots::conj {

SlopeDataset SlopeDataset::make(std::string name, std::vector<TaggedSlope> exc,
                                std::vector<BoundarySlope> bnd,
                                bool boundary_complete) {
  SlopeDataset d;
  d.name = std::move(name);
  d.exceptional = std::move(exc);
  d.boundary = std::move(bnd);
  d.boundary_complete = boundary_complete;
  for (const auto& e : d.exceptional)
    if (e.slope.is_meridian())
      throw std::invalid_argument("SlopeDataset: meridian cannot be an "
                                  "exceptional slope");
  for (const auto& b : d.boundary)
    if (b.slope.is_meridian())
      throw std::invalid_argument("SlopeDataset: meridian cannot be a "
                                  "boundary slope");
  for (const auto& e : d.exceptional) {
    if (e.tag != TagKind::Toroidal) continue;
    auto it = std::find_if(d.boundary.begin(), d.boundary.end(),
                           [&](const BoundarySlope& b) {
                             return b.slope == e.slope;
                           });
    if (it == d.boundary.end())
      d.boundary.push_back({e.slope, CertSet::parse("T")});
    else if (!it->certs.has('T'))
      it->certs = it->certs.united(CertSet::parse("T"));
  }
  std::sort(d.exceptional.begin(), d.exceptional.end(),
            [](const TaggedSlope& a, const TaggedSlope& b) {
              return a.slope < b.slope;
            });
  std::sort(d.boundary.begin(), d.boundary.end(),
            [](const BoundarySlope& a, const BoundarySlope& b) {
              return a.slope < b.slope;
            });
  std::vector<BoundarySlope> merged;
  for (const auto& b : d.boundary) {
    if (!merged.empty() && merged.back().slope == b.slope)
      merged.back().certs = merged.back().certs.united(b.certs);
    else
      merged.push_back(b);
  }
  d.boundary = std::move(merged);
  return d;
}

SlopeDataset SlopeDataset::mirrored() const {
  SlopeDataset d;
  d.name = name;
  d.boundary_complete = boundary_complete;
  for (const auto& e : exceptional) d.exceptional.push_back({e.slope.mirror(), e.tag});
  for (const auto& b : boundary) d.boundary.push_back({b.slope.mirror(), b.certs});
  return make(d.name, std::move(d.exceptional), std::move(d.boundary),
              d.boundary_complete);
}

bool SlopeDataset::toroidal(const Slope& s) const {
  for (const auto& b : boundary)
    if (b.slope == s) return b.certs.has('T');
  return false;
}

std::string Verdict::str() const {
  std::string out = status_name(status);
  if (case_id) out += " case " + std::to_string(*case_id);
  if (witnesses)
    out += " (" + witnesses->first.str() + ", " + witnesses->second.str() + ")";
  if (!reason.empty()) out += " [" + reason + "]";
  return out;
}

namespace {

Verdict no_witness(const SlopeDataset& d, const char* what) {
  Verdict v;
  if (d.boundary_complete) {
    v.status = Status::Fails;
    v.reason = std::string("no ") + what +
               " witness pair among a complete boundary list";
  } else {
    v.status = Status::Unknown;
    v.reason = std::string("no ") + what +
               " witness pair; boundary data incomplete";
  }
  return v;
}

}  // namespace

Verdict check_bounding_pair(const SlopeDataset& d) {
  if (d.exceptional.empty()) {
    Verdict v;
    v.status = Status::Holds;
    v.reason = "vacuous: no non-trivial exceptional surgeries";
    for (size_t i = 0; i < d.boundary.size(); ++i) {
      if (v.witnesses) break;
      for (size_t j = i + 1; j < d.boundary.size(); ++j)
        if (d.boundary[i].slope < d.boundary[j].slope) {
          v.witnesses = {d.boundary[i].slope, d.boundary[j].slope};
          break;
        }
    }
    return v;
  }
  std::optional<std::pair<Slope, Slope>> best;
  auto better = [](const std::pair<Slope, Slope>& a,
                   const std::pair<Slope, Slope>& b) {
    Rat wa = a.second.to_rat() - a.first.to_rat();
    Rat wb = b.second.to_rat() - b.first.to_rat();
    if (wa != wb) return wa < wb;
    if (!(a.first == b.first)) return a.first < b.first;
    return a.second < b.second;
  };
  for (const auto& b1 : d.boundary)
    for (const auto& b2 : d.boundary) {
      if (!(b1.slope < b2.slope)) continue;
      SlopeInterval iv(b1.slope, b2.slope);
      bool ok = std::all_of(d.exceptional.begin(), d.exceptional.end(),
                            [&](const TaggedSlope& e) {
                              return iv.contains(e.slope);
                            });
      if (!ok) continue;
      std::pair<Slope, Slope> cand = {b1.slope, b2.slope};
      if (!best || better(cand, *best)) best = cand;
    }
  if (!best) return no_witness(d, "bounding");
  Verdict v;
  v.status = Status::Holds;
  v.witnesses = *best;
  return v;
}

namespace {

bool is_exceptional(const SlopeDataset& d, long long integer) {
  Slope s(integer);
  return std::any_of(d.exceptional.begin(), d.exceptional.end(),
                     [&](const TaggedSlope& e) { return e.slope == s; });
}

bool nit_candidate(const BoundarySlope& b) {
  if (!b.slope.is_integer()) return true;
  return b.certs.has('T');
}

// Conditions of the refined conjecture for an ordered NIT pair b1 <= b2.
bool nit_pair_works(const SlopeDataset& d, const Slope& b1, const Slope& b2) {
  long long lo = b1.floor(), hi = b2.ceil();
  if (lo == hi && !(b1 == b2 && b1.is_integer()))
    throw std::logic_error("nit check: floor(b1) = ceil(b2) requires "
                           "b1 = b2 integral");
  for (const auto& e : d.exceptional) {
    Rat r = e.slope.to_rat();
    if (r < Rat(lo) || r > Rat(hi)) return false;
  }
  long long ilo = b1.ceil(), ihi = b2.floor();
  for (long long k = ilo; k <= ihi; ++k)
    if (!is_exceptional(d, k)) return false;
  return true;
}

int nit_case_id(const Slope& b1, const Slope& b2) {
  int integral = (b1.is_integer() ? 1 : 0) + (b2.is_integer() ? 1 : 0);
  if (integral == 2) return 1;
  if (integral == 1) return 2;
  return 3;
}

}  // namespace

Verdict check_nit_refinement(const SlopeDataset& d) {
  if (d.exceptional.empty())
    throw std::invalid_argument("check_nit_refinement: dataset has no "
                                "non-trivial exceptional slopes");
  std::vector<Slope> nit;
  for (const auto& b : d.boundary)
    if (nit_candidate(b)) nit.push_back(b.slope);

  std::optional<std::pair<Slope, Slope>> best;
  auto span = [](const std::pair<Slope, Slope>& p) {
    return p.second.ceil() - p.first.floor();
  };
  auto better = [&](const std::pair<Slope, Slope>& a,
                    const std::pair<Slope, Slope>& b) {
    if (span(a) != span(b)) return span(a) < span(b);
    if (!(a.first == b.first)) return a.first < b.first;
    return a.second < b.second;
  };
  for (const auto& b1 : nit)
    for (const auto& b2 : nit) {
      if (b2 < b1) continue;
      if (!nit_pair_works(d, b1, b2)) continue;
      std::pair<Slope, Slope> cand = {b1, b2};
      if (!best || better(cand, *best)) best = cand;
    }
  if (!best) return no_witness(d, "NIT");
  Verdict v;
  v.status = Status::Holds;
  v.witnesses = *best;
  v.case_id = nit_case_id(best->first, best->second);
  return v;
}

Verdict check_single_exceptional(const SlopeDataset& d, SingleKind kind) {
  if (d.exceptional.size() != 1)
    throw std::invalid_argument("check_single_exceptional: dataset must have "
                                "exactly one exceptional slope");
  Slope m = d.exceptional.front().slope;
  Verdict v;
  if (kind == SingleKind::Toroidal) {
    v.status = Status::Holds;
    v.witnesses = {m, m};
    v.case_id = nit_case_id(m, m);
    return v;
  }
  Rat lo = m.to_rat() - Rat(1), hi = m.to_rat() + Rat(1);
  for (const auto& b : d.boundary) {
    Rat r = b.slope.to_rat();
    if (lo < r && r < hi) {
      v.status = Status::Holds;
      v.witnesses = {b.slope, b.slope};
      v.case_id = nit_case_id(b.slope, b.slope);
      return v;
    }
  }
  v.status = Status::Unknown;
  v.reason = "no boundary slope listed in (" + Slope(lo).str() + ", " +
             Slope(hi).str() + "); boundary data incomplete";
  return v;
}

bool amphicheiral_bound(long long m) {
  long long a = m < 0 ? -m : m;
  // 2|m|+1 forced exceptional integers, plus the meridian, within ten slopes.
  return 2 * a + 1 <= 10 - 1;
}

bool consecutive_run(const SlopeDataset& d) {
  std::vector<long long> ints;
  for (const auto& e : d.exceptional)
    if (e.slope.is_integer()) ints.push_back(e.slope.numerator());
  std::sort(ints.begin(), ints.end());
  for (size_t i = 0; i + 1 < ints.size(); ++i)
    if (ints[i + 1] != ints[i] + 1) return false;
  return true;
}

SingleWitnessReport single_witness_probe(const SlopeDataset& d) {
  SingleWitnessReport rep;
  Verdict v = check_nit_refinement(d);
  if (v.status != Status::Holds || !v.case_id || *v.case_id != 3) {
    rep.applicable = false;
    rep.note = "NIT check did not hold in case 3";
    return rep;
  }
  rep.applicable = true;
  for (const auto& b : d.boundary) {
    if (b.slope.is_integer()) continue;
    if (nit_pair_works(d, b.slope, b.slope)) {
      rep.single_witness = b.slope;
      rep.note = "single non-integral witness b = " + b.slope.str();
      return rep;
    }
  }
  rep.counterexample_candidate = true;
  rep.note = "case 3 holds only with a strict pair b1 < b2";
  return rep;
}

SlopeDataset from_family(const families::FamilyDataset& fd) {
  std::vector<TaggedSlope> exc;
  std::vector<BoundarySlope> bnd;
  for (const auto& a : fd.exceptional) {
    TagKind tag = a.tag == families::Tag::Toroidal ? TagKind::Toroidal
                                                   : TagKind::Seifert;
    exc.push_back({a.slope, tag});
    if (a.tag == families::Tag::Toroidal)
      bnd.push_back({a.slope, CertSet::parse("T")});
  }
  for (const auto& a : fd.boundary_extra) bnd.push_back({a.slope, a.certs});
  return SlopeDataset::make(fd.label, std::move(exc), std::move(bnd),
                            fd.boundary_complete);
}

}  // namespace knots::conj
