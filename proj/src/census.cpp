#include "knots/census.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace knots::census {

// --- annotated list grammar -------------------------------------------------

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  void expect(char c, const char* what) {
    if (done() || text[pos] != c)
      throw ParseError(std::string("expected ") + what, pos);
    ++pos;
  }
};

Slope parse_slope_token(Cursor& cur) {
  size_t start = cur.pos;
  if (cur.peek() == '+' || cur.peek() == '-') ++cur.pos;
  auto digits = [&] {
    size_t n = 0;
    while (!cur.done() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
      ++cur.pos;
      ++n;
    }
    return n;
  };
  if (digits() == 0) throw ParseError("expected a slope", start);
  if (cur.peek() == '/') {
    ++cur.pos;
    if (cur.peek() == '+' || cur.peek() == '-')
      throw ParseError("signed denominator", cur.pos);
    if (digits() == 0) throw ParseError("expected a denominator", cur.pos);
  }
  std::string_view tok = cur.text.substr(start, cur.pos - start);
  try {
    return Slope::parse(tok);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), start);
  }
}

Entry parse_item(Cursor& cur) {
  Entry e;
  if (cur.peek() == '(') {
    ++cur.pos;
    cur.skip_ws();
    e.slope = parse_slope_token(cur);
    cur.skip_ws();
    cur.expect(',', "',' inside tuple");
    cur.skip_ws();
    cur.expect('\'', "opening quote");
    size_t letters_at = cur.pos;
    std::string letters;
    while (!cur.done() && cur.peek() != '\'') letters += cur.text[cur.pos++];
    cur.expect('\'', "closing quote");
    cur.skip_ws();
    cur.expect(')', "')'");
    try {
      e.certs = CertSet::parse(letters);
    } catch (const std::exception& ex) {
      throw ParseError(ex.what(), letters_at);
    }
    if (letters.empty()) throw ParseError("empty certificate set", letters_at);
    e.exceptional = e.certs.has('T');
  } else {
    e.slope = parse_slope_token(cur);
    e.exceptional = true;
  }
  return e;
}

}  // namespace

std::vector<Entry> parse_annotated_list(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  cur.expect('[', "'['");
  std::vector<Entry> out;
  cur.skip_ws();
  if (cur.peek() != ']') {
    while (true) {
      cur.skip_ws();
      Entry e = parse_item(cur);
      auto it = std::find_if(out.begin(), out.end(), [&](const Entry& x) {
        return x.slope == e.slope;
      });
      if (it == out.end()) {
        out.push_back(e);
      } else {
        it->exceptional = it->exceptional || e.exceptional;
        it->certs = it->certs.united(e.certs);
      }
      cur.skip_ws();
      if (cur.peek() == ',') {
        ++cur.pos;
        continue;
      }
      break;
    }
  }
  cur.expect(']', "']'");
  cur.skip_ws();
  if (!cur.done()) throw ParseError("trailing characters", cur.pos);
  return out;
}

std::string print_annotated_list(const std::vector<Entry>& entries) {
  std::string out = "[";
  bool first = true;
  auto emit = [&](const std::string& s) {
    if (!first) out += ", ";
    first = false;
    out += s;
  };
  for (const auto& e : entries) {
    bool tuple = !e.certs.empty();
    bool bare = e.exceptional && !e.certs.has('T');
    if (bare) emit(e.slope.str());
    if (tuple) emit("(" + e.slope.str() + ", '" + e.certs.str() + "')");
  }
  return out + "]";
}

// --- records and transforms -------------------------------------------------

CensusRecord CensusRecord::mirrored() const {
  CensusRecord out = *this;
  for (auto& e : out.std_slopes) e.slope = e.slope.mirror();
  for (auto& e : out.snappy_slopes) e.slope = e.slope.mirror();
  return out;
}

std::string CoordTransform::str() const {
  std::string out = "std = ";
  out += eps == 1 ? "snappy" : "-snappy";
  if (offset > 0) out += " + " + std::to_string(offset);
  if (offset < 0) out += " - " + std::to_string(-offset);
  return out;
}

CoordTransform infer_transform(
    const std::vector<std::pair<Slope, Slope>>& pairs) {
  for (const auto& [s, t] : pairs)
    if (s.is_meridian() || t.is_meridian())
      throw std::invalid_argument("infer_transform: meridian in pairs");
  size_t j = 1;
  while (j < pairs.size() && pairs[j].first == pairs[0].first) ++j;
  if (pairs.size() < 2 || j == pairs.size())
    throw std::invalid_argument(
        "infer_transform: underdetermined (need two pairs with distinct "
        "SnapPy slopes)");
  Rat ds = pairs[0].first.to_rat() - pairs[j].first.to_rat();
  Rat dt = pairs[0].second.to_rat() - pairs[j].second.to_rat();
  Rat eps = dt / ds;
  if (!(eps == Rat(1) || eps == Rat(-1)))
    throw std::invalid_argument(
        "infer_transform: no affine meridian-fixing transform (slope ratio " +
        eps.str() + " is not +-1)");
  Rat c = pairs[0].second.to_rat() - eps * pairs[0].first.to_rat();
  if (!c.is_integer())
    throw std::invalid_argument(
        "infer_transform: no affine meridian-fixing transform (offset " +
        c.str() + " is not integral)");
  CoordTransform t{eps == Rat(1) ? 1 : -1, c.num()};
  for (const auto& [s, v] : pairs)
    if (!(apply_transform(t, s) == v))
      throw std::invalid_argument(
          "infer_transform: no affine meridian-fixing transform (pair (" +
          s.str() + ", " + v.str() + ") breaks " + t.str() + ")");
  return t;
}

CoordTransform infer_transform(const CensusRecord& r) {
  if (r.duplicate_coordinates)
    throw std::invalid_argument(
        "infer_transform: record " + r.name +
        " repeats standard coordinates in the SnapPy column");
  if (r.snappy_slopes.size() != r.std_slopes.size())
    throw std::invalid_argument("infer_transform: column length mismatch");
  std::vector<std::pair<Slope, Slope>> pairs;
  for (size_t i = 0; i < r.snappy_slopes.size(); ++i)
    pairs.push_back({r.snappy_slopes[i].slope, r.std_slopes[i].slope});
  return infer_transform(pairs);
}

Slope apply_transform(const CoordTransform& t, const Slope& s) {
  if (s.is_meridian())
    throw std::invalid_argument("apply_transform: meridian rejected");
  return Slope(Rat(t.eps) * s.to_rat() + Rat(t.offset));
}

// --- CSV --------------------------------------------------------------------

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string quote_csv(const std::string& field) {
  bool need = field.find_first_of(",\"\n'[] ") != std::string::npos;
  if (!need) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

bool census_name_ok(const std::string& name) {
  if (name.empty()) return false;
  char c = name[0];
  if (c != 'm' && c != 's' && c != 'v' && c != 't' && c != 'o') return false;
  if (name.size() < 2) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char d) {
    return std::isdigit(static_cast<unsigned char>(d));
  });
}

bool matching_annotations(const std::vector<Entry>& a,
                          const std::vector<Entry>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].exceptional != b[i].exceptional || !(a[i].certs == b[i].certs))
      return false;
  return true;
}

bool boolean_field(const std::string& f) {
  if (f == "1" || f == "y" || f == "true") return true;
  if (f == "0" || f == "n" || f == "false") return false;
  throw std::invalid_argument("bad boolean field '" + f + "'");
}

std::string list_text(const std::vector<Entry>& entries) {
  return print_annotated_list(entries);
}

}  // namespace

CsvResult parse_csv(std::string_view text, FileKind kind) {
  CsvResult out;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("name,", 0) == 0) continue;  // header
    try {
      auto fields = split_csv_row(line);
      size_t expected = kind == FileKind::Remaining ? 7 : 4;
      if (fields.size() < 3)
        throw std::invalid_argument("too few columns");
      if (fields.size() > expected)
        throw std::invalid_argument("too many columns");
      CensusRecord r;
      r.name = fields[0];
      if (!census_name_ok(r.name))
        throw std::invalid_argument("bad census name '" + r.name + "'");
      r.std_slopes = parse_annotated_list(fields[1]);
      r.snappy_slopes = parse_annotated_list(fields[2]);
      if (fields.size() > 3) r.knot_name = fields[3];
      if (kind == FileKind::Remaining) {
        if (fields.size() != 7)
          throw std::invalid_argument("Remaining rows need 7 columns");
        r.verified_c1 = boolean_field(fields[4]);
        r.verified_c6 = boolean_field(fields[5]);
        r.verified_any = boolean_field(fields[6]);
        if (*r.verified_any != (*r.verified_c1 || *r.verified_c6))
          throw std::invalid_argument(
              "at-least-one column disagrees with the per-conjecture columns");
      }
      if (!matching_annotations(r.std_slopes, r.snappy_slopes))
        throw std::invalid_argument(
            "standard and SnapPy lists have mismatched annotations");
      if (kind == FileKind::TorOnly) {
        for (const auto& e : r.std_slopes)
          if (!e.certs.has('T'))
            throw std::invalid_argument("TorOnly rows may list only toroidal "
                                        "slopes");
      }
      for (const auto& e : r.std_slopes)
        if (e.certs.has('T') && !e.exceptional)
          throw std::invalid_argument("T-certified slope must be exceptional");
      r.duplicate_coordinates = list_text(r.std_slopes) == list_text(r.snappy_slopes);
      out.records.push_back(std::move(r));
    } catch (const std::exception& e) {
      out.errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string write_csv(const std::vector<CensusRecord>& records,
                      FileKind kind) {
  std::string out = "name,standard,snappy,knot";
  if (kind == FileKind::Remaining) out += ",conj1,conj6,either";
  out += "\n";
  for (const auto& r : records) {
    out += r.name;
    out += ",\"" + list_text(r.std_slopes) + "\"";
    out += ",\"" + list_text(r.snappy_slopes) + "\"";
    out += "," + quote_csv(r.knot_name);
    if (kind == FileKind::Remaining) {
      auto b = [](std::optional<bool> v) {
        return std::string(v.value_or(false) ? "1" : "0");
      };
      out += "," + b(r.verified_c1) + "," + b(r.verified_c6) + "," +
             b(r.verified_any);
    }
    out += "\n";
  }
  return out;
}

// --- verification -----------------------------------------------------------

conj::SlopeDataset to_dataset(const CensusRecord& r, bool use_std) {
  const auto& entries = use_std ? r.std_slopes : r.snappy_slopes;
  std::vector<conj::TaggedSlope> exc;
  std::vector<conj::BoundarySlope> bnd;
  bool has_m = false, has_c = false;
  for (const auto& e : entries) {
    if (e.exceptional)
      exc.push_back({e.slope, e.certs.has('T') ? TagKind::Toroidal
                                               : TagKind::Unclassified});
    if (!e.certs.empty()) bnd.push_back({e.slope, e.certs});
    has_m = has_m || e.certs.has('M');
    has_c = has_c || e.certs.has('C');
  }
  char initial = r.name.empty() ? '\0' : r.name[0];
  bool seven_or_fewer = initial == 'm' || initial == 's' || initial == 'v';
  bool complete = has_m || (seven_or_fewer && has_c);
  return conj::SlopeDataset::make(r.name, std::move(exc), std::move(bnd),
                                  complete);
}

BatchReport batch_verify(const std::vector<CensusRecord>& records) {
  BatchReport report;
  for (const auto& r : records) {
    RecordVerdicts rv;
    rv.name = r.name;
    try {
      conj::SlopeDataset d = to_dataset(r);
      rv.no_exceptional = d.exceptional.empty();
      rv.toroidal_only =
          !d.exceptional.empty() &&
          std::all_of(d.exceptional.begin(), d.exceptional.end(),
                      [](const conj::TaggedSlope& t) {
                        return t.tag == TagKind::Toroidal;
                      });
      rv.bounding = conj::check_bounding_pair(d);
      if (rv.no_exceptional) {
        rv.nit.status = conj::Status::Holds;
        rv.nit.reason = "vacuous: no non-trivial exceptional surgeries";
      } else {
        rv.nit = conj::check_nit_refinement(d);
      }
    } catch (const std::exception& e) {
      report.errors.push_back(r.name + ": " + e.what());
      continue;
    }
    report.records.push_back(std::move(rv));
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const RecordVerdicts& a, const RecordVerdicts& b) {
              return a.name < b.name;
            });
  for (const auto& rv : report.records) {
    report.no_exceptional += rv.no_exceptional ? 1 : 0;
    report.toroidal_only += rv.toroidal_only ? 1 : 0;
    auto tally = [](conj::Status s, int& h, int& u, int& f) {
      switch (s) {
        case conj::Status::Holds: ++h; break;
        case conj::Status::Unknown: ++u; break;
        case conj::Status::Fails: ++f; break;
      }
    };
    tally(rv.bounding.status, report.holds_c1, report.unknown_c1,
          report.fails_c1);
    tally(rv.nit.status, report.holds_c6, report.unknown_c6, report.fails_c6);
  }
  return report;
}

std::string BatchReport::text() const {
  std::ostringstream out;
  out << "records: " << records.size() << ", parse errors: " << errors.size()
      << "\n";
  out << "no exceptional: " << no_exceptional
      << ", toroidal-only: " << toroidal_only << "\n";
  out << "conjecture 1 (bounding pair): " << holds_c1 << " Holds, "
      << unknown_c1 << " Unknown, " << fails_c1 << " Fails\n";
  out << "conjecture 2 (NIT refinement): " << holds_c6 << " Holds, "
      << unknown_c6 << " Unknown, " << fails_c6 << " Fails\n";
  for (const auto& rv : records)
    out << rv.name << "  C1: " << rv.bounding.str()
        << "  C2: " << rv.nit.str() << "\n";
  for (const auto& e : errors) out << "error: " << e << "\n";
  return out.str();
}

// --- embedded mini-dataset --------------------------------------------------

std::string_view embedded_csv() {
  static const char* kCsv =
      "name,standard,snappy,knot\n"
      "m004,\"[(-4, 'T'), -3, -2, -1, (0, 'T'), 1, 2, 3, (4, 'T')]\","
      "\"[(-4, 'T'), -3, -2, -1, (0, 'T'), 1, 2, 3, (4, 'T')]\",4_1\n"
      "m016,\"[(16, 'T'), 17, 18, (37/2, 'T'), 19, (20, 'T')]\","
      "\"[(16, 'T'), 17, 18, (37/2, 'T'), 19, (20, 'T')]\",(-2 3 7)-pretzel\n"
      "s682,\"[(-3/2, 'C'), -1, (-1/3, 'C'), 0, (0, 'L')]\","
      "\"[(-3/2, 'C'), -1, (-1/3, 'C'), 0, (0, 'L')]\",\n"
      "v0319,\"[(-62, 'T'), -63, -64, (-194/3, 'C'), -65, (-206/3, 'C')]\","
      "\"[(-2, 'T'), -1, 0, (2/3, 'C'), 1, (14/3, 'C')]\",\n"
      "v1359,\"[(121/2, 'CK'), 59, (176/3, 'C'), 58, (57, 'T')]\","
      "\"[(-5/2, 'CK'), -1, (-2/3, 'C'), 0, (1, 'T')]\",\n";
  return kCsv;
}

std::vector<CensusRecord> embedded_records() {
  CsvResult res = parse_csv(embedded_csv(), FileKind::Verified);
  if (!res.errors.empty())
    throw std::logic_error("embedded census data failed to parse: " +
                           res.errors.front());
  return res.records;
}

}  // namespace knots::census
