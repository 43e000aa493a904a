#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knots/certs.hpp"
#include "knots/conjectures.hpp"
#include "knots/slope.hpp"

namespace knots::census {

// One element of an annotated slope list. Bare numbers are exceptional
// slopes; (slope, 'X..') tuples carry boundary certificates; certificate T
// marks a toroidal slope, which is both. A slope may be listed both bare and
// certified (exceptional slope that is also a certified boundary slope).
struct Entry {
  Slope slope;
  bool exceptional = false;
  CertSet certs;
};

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Parses `[(-2, 'T'), -1, 0, (2/3, 'C'), 1, (14/3, 'C')]`; merges duplicate
// slopes. Errors carry the character offset.
std::vector<Entry> parse_annotated_list(std::string_view text);

// Canonical form: ascending; bare exceptional value first, then the certified
// tuple when the entry also carries certificates without T.
std::string print_annotated_list(const std::vector<Entry>& entries);

enum class FileKind { TorOnly, Verified, Remaining };

struct CensusRecord {
  std::string name;
  std::vector<Entry> std_slopes;
  std::vector<Entry> snappy_slopes;
  std::string knot_name;
  std::optional<bool> verified_c1, verified_c6, verified_any;  // Remaining kind
  // SnapPy column repeats the standard coordinates (the census rows whose
  // trivial SnapPy slope is not 1/0); excluded from transform inference.
  bool duplicate_coordinates = false;

  CensusRecord mirrored() const;
};

struct CoordTransform {
  int eps = 1;          // +1 or -1
  long long offset = 0;  // standard = eps * snappy + offset
  std::string str() const;
};

// Solves standard = eps*snappy + c exactly from >= 2 pairs with distinct
// snappy values and verifies every pair; eps must be +-1 and c integral.
CoordTransform infer_transform(
    const std::vector<std::pair<Slope, Slope>>& pairs);

CoordTransform infer_transform(const CensusRecord& record);

Slope apply_transform(const CoordTransform& t, const Slope& s);

// CSV I/O. Row shape: name,"std list","snappy list",knot_name and, for the
// Remaining kind, three extra 0/1 columns (conjecture 1 verified, refined
// conjecture verified, at least one verified).
struct CsvResult {
  std::vector<CensusRecord> records;
  std::vector<std::string> errors;  // per-row, collected not fatal
};
CsvResult parse_csv(std::string_view text, FileKind kind);
std::string write_csv(const std::vector<CensusRecord>& records, FileKind kind);

// Dataset in SnapPy coordinates (the frame the worked examples use), or the
// standard frame on request.
conj::SlopeDataset to_dataset(const CensusRecord& r, bool use_std = false);

struct RecordVerdicts {
  std::string name;
  conj::Verdict bounding;
  conj::Verdict nit;
  bool no_exceptional = false;
  bool toroidal_only = false;
};

struct BatchReport {
  std::vector<RecordVerdicts> records;  // sorted by name
  std::vector<std::string> errors;
  int no_exceptional = 0;
  int toroidal_only = 0;
  int holds_c1 = 0, unknown_c1 = 0, fails_c1 = 0;
  int holds_c6 = 0, unknown_c6 = 0, fails_c6 = 0;

  bool any_fails() const { return fails_c1 > 0 || fails_c6 > 0; }
  std::string text() const;
};

BatchReport batch_verify(const std::vector<CensusRecord>& records);

// Mini-dataset drawn from the worked examples and the family tables
// (v0319, v1359, s682, m004, m016), as a Verified-kind CSV.
std::string_view embedded_csv();
std::vector<CensusRecord> embedded_records();

}  // namespace knots::census
