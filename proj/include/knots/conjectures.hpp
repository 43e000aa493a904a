#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knots/certs.hpp"
#include "knots/families.hpp"
#include "knots/slope.hpp"

namespace knots::conj {

struct TaggedSlope {
  Slope slope;
  TagKind tag = TagKind::Unclassified;
};

struct BoundarySlope {
  Slope slope;
  CertSet certs;
};

// Per-knot slope data the checkers quantify over. Construction normalizes:
// slopes sorted, meridians rejected, and every toroidal exceptional slope is
// also entered as a boundary slope (with certificate T).
struct SlopeDataset {
  std::string name;
  std::vector<TaggedSlope> exceptional;
  std::vector<BoundarySlope> boundary;
  bool boundary_complete = false;

  static SlopeDataset make(std::string name, std::vector<TaggedSlope> exc,
                           std::vector<BoundarySlope> bnd,
                           bool boundary_complete);
  SlopeDataset mirrored() const;
  bool toroidal(const Slope& s) const;  // listed with certificate T
};

enum class Status { Holds, Fails, Unknown };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Holds: return "Holds";
    case Status::Fails: return "Fails";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

struct Verdict {
  Status status = Status::Unknown;
  std::optional<int> case_id;  // trichotomy case, NIT check only
  std::optional<std::pair<Slope, Slope>> witnesses;
  std::string reason;

  std::string str() const;
};

// First conjecture: some boundary pair b1 < b2 contains every non-trivial
// exceptional slope in [b1, b2]. Fails only with complete boundary data.
// Witness tie-break: minimal b2 - b1, then smallest b1, then smallest b2.
// With no exceptional slopes the check holds vacuously.
Verdict check_bounding_pair(const SlopeDataset& d);

// Refined conjecture: some NIT pair b1 <= b2 with all exceptional slopes in
// [floor(b1), ceil(b2)] and, when ceil(b1) <= floor(b2), every integer in
// [ceil(b1), floor(b2)] exceptional. NIT: non-integral, or integral with a T
// certificate. case_id: 1 = both witnesses integral toroidal, 2 = mixed,
// 3 = both non-integral. Tie-break: minimal ceil(b2) - floor(b1), then
// smallest b1, then smallest b2.
Verdict check_nit_refinement(const SlopeDataset& d);

enum class SingleKind { Toroidal, Cyclic };

// Single-exceptional-slope theorem: toroidal m gives b1 = b2 = m; cyclic m is
// witnessed by a boundary slope in the open interval (m-1, m+1) when listed.
Verdict check_single_exceptional(const SlopeDataset& d, SingleKind kind);

// Amphicheiral knots satisfying the refined conjecture force 2|m|+1 exceptional
// integers; with the meridian that must stay within the ten-surgery bound.
bool amphicheiral_bound(long long m);

// Whether the integral exceptional slopes form a (possibly empty) run of
// consecutive integers.
bool consecutive_run(const SlopeDataset& d);

// For a dataset whose NIT check holds in case 3: can a single non-integral
// boundary slope b1 = b2 = b also witness it?
struct SingleWitnessReport {
  bool applicable = false;          // NIT check held with case 3
  std::optional<Slope> single_witness;
  bool counterexample_candidate = false;  // case 3 holds, but only with b1 < b2
  std::string note;
};
SingleWitnessReport single_witness_probe(const SlopeDataset& d);

// Bridge from the family generators.
SlopeDataset from_family(const families::FamilyDataset& d);

}  // namespace knots::conj
