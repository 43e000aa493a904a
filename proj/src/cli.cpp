#include "knots/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "knots/census.hpp"
#include "knots/conjectures.hpp"
#include "knots/contfrac.hpp"
#include "knots/csnorm.hpp"
#include "knots/families.hpp"

namespace knots::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kUsage = R"USAGE(usage: slopes <command> [args]

commands:
  cf eval <cf>                     exact value of [a1,a2,...]
  cf simplify <cf>                 all-positive form of [2w,v,2u]
  cf equiv <cf> <cf>               two-bridge link equivalence of simple cfs
  cf ht-slopes <frac|cf> [--calibrate <slope>]
                                   two-bridge knot boundary slopes
  cf lk <cf>                       linking number of the two-bridge link
  families <descriptor>            slope dataset for a knot family
      descriptors: fig8 | twist:n,+|- | twobridge:b1,b2 | pretzel:q1,q2,q3 |
                   montesinos:r1,r2,r3 | link:<cf> | torti:<frac>,<n> |
                   magic:<u>,<r>
  verify --family <descriptor> | --dataset <file.json> |
         --census <file> --kind <kind> | --embedded
  census ingest <file> --kind toronly|verified|remaining
  census transform <name> [--pairs "(s,t);(s,t)"]
  census report [<file> --kind <kind>]
  norm width --s <q> --m <q> --t <q> --rM <slope> --n <int>
             --parity integer|half
  norm bound --s <q>
  norm interval --t <slope> --rm <slope> --rM <slope>

global flags: --format json|text|csv   --mirror   --quiet
)USAGE";

struct Options {
  std::string format = "text";
  bool mirror = false;
  bool quiet = false;
  std::vector<std::string> rest;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Options preprocess(const std::vector<std::string>& args) {
  Options o;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--mirror") {
      o.mirror = true;
    } else if (a == "--quiet") {
      o.quiet = true;
    } else if (a == "--format") {
      if (i + 1 >= args.size()) throw UsageError("--format needs a value");
      o.format = args[++i];
    } else if (a.rfind("--format=", 0) == 0) {
      o.format = a.substr(9);
    } else {
      o.rest.push_back(a);
    }
  }
  if (o.format != "text" && o.format != "json" && o.format != "csv")
    throw UsageError("unknown format '" + o.format + "'");
  return o;
}

std::string flag_value(std::vector<std::string>& rest, const std::string& name) {
  for (size_t i = 0; i < rest.size(); ++i) {
    if (rest[i] == name) {
      if (i + 1 >= rest.size()) throw UsageError(name + " needs a value");
      std::string v = rest[i + 1];
      rest.erase(rest.begin() + i, rest.begin() + i + 2);
      return v;
    }
    if (rest[i].rfind(name + "=", 0) == 0) {
      std::string v = rest[i].substr(name.size() + 1);
      rest.erase(rest.begin() + i);
      return v;
    }
  }
  return "";
}

bool flag_present(std::vector<std::string>& rest, const std::string& name) {
  auto it = std::find(rest.begin(), rest.end(), name);
  if (it == rest.end()) return false;
  rest.erase(it);
  return true;
}

// --- json rendering ---------------------------------------------------------

ordered_json verdict_json(const conj::Verdict& v) {
  ordered_json j;
  j["status"] = conj::status_name(v.status);
  if (v.case_id) j["case"] = *v.case_id;
  if (v.witnesses)
    j["witnesses"] = {v.witnesses->first.str(), v.witnesses->second.str()};
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

ordered_json dataset_json(const conj::SlopeDataset& d) {
  ordered_json j;
  j["name"] = d.name;
  j["exceptional"] = ordered_json::array();
  for (const auto& e : d.exceptional)
    j["exceptional"].push_back(
        {{"slope", e.slope.str()}, {"tag", tag_name(e.tag)}});
  j["boundary"] = ordered_json::array();
  for (const auto& b : d.boundary)
    j["boundary"].push_back(
        {{"slope", b.slope.str()}, {"certs", b.certs.str()}});
  j["boundary_complete"] = d.boundary_complete;
  return j;
}

ordered_json family_json(const families::FamilyDataset& d) {
  ordered_json j;
  j["family"] = d.label;
  j["display"] = d.display_text();
  j["exceptional"] = ordered_json::array();
  auto tag_str = [](families::Tag t) {
    switch (t) {
      case families::Tag::Toroidal: return "T";
      case families::Tag::Seifert: return "S";
      case families::Tag::NonIntegral: return "NI";
      case families::Tag::Boundary: return "B";
    }
    return "?";
  };
  for (const auto& a : d.exceptional)
    j["exceptional"].push_back(
        {{"slope", a.slope.str()}, {"tag", tag_str(a.tag)}});
  j["boundary_extra"] = ordered_json::array();
  for (const auto& a : d.boundary_extra)
    j["boundary_extra"].push_back({{"slope", a.slope.str()},
                                   {"tag", tag_str(a.tag)},
                                   {"certs", a.certs.str()}});
  j["boundary_complete"] = d.boundary_complete;
  return j;
}

conj::SlopeDataset dataset_from_json(const ordered_json& j) {
  std::vector<conj::TaggedSlope> exc;
  std::vector<conj::BoundarySlope> bnd;
  for (const auto& e : j.at("exceptional")) {
    TagKind tag = TagKind::Unclassified;
    std::string t = e.value("tag", "unclassified");
    if (t == "toroidal") tag = TagKind::Toroidal;
    else if (t == "seifert") tag = TagKind::Seifert;
    else if (t == "cyclic-finite") tag = TagKind::CyclicFinite;
    exc.push_back({Slope::parse(e.at("slope").get<std::string>()), tag});
  }
  if (j.contains("boundary"))
    for (const auto& b : j.at("boundary"))
      bnd.push_back({Slope::parse(b.at("slope").get<std::string>()),
                     CertSet::parse(b.value("certs", ""))});
  return conj::SlopeDataset::make(j.value("name", "dataset"), std::move(exc),
                                  std::move(bnd),
                                  j.value("boundary_complete", false));
}

// --- cf ---------------------------------------------------------------------

int cmd_cf(Options& o, std::ostream& out) {
  if (o.rest.empty()) throw UsageError("cf: missing operation");
  std::string op = o.rest[0];
  std::string calibrate = flag_value(o.rest, "--calibrate");
  auto arg = [&](size_t i) -> const std::string& {
    if (i >= o.rest.size()) throw UsageError("cf " + op + ": missing argument");
    return o.rest[i];
  };
  if (op == "eval") {
    out << cf_eval(ContFrac::parse(arg(1))).str() << "\n";
    return 0;
  }
  if (op == "simplify") {
    ContFrac cf = ContFrac::parse(arg(1));
    if (cf.size() != 3 || cf[0] % 2 != 0 || cf[2] % 2 != 0)
      throw UsageError("cf simplify: expected [2w,v,2u]");
    out << simple_form(cf[0] / 2, cf[1], cf[2] / 2).str() << "\n";
    return 0;
  }
  if (op == "equiv") {
    bool eq = cf_equivalent(ContFrac::parse(arg(1)), ContFrac::parse(arg(2)));
    out << (eq ? "true" : "false") << "\n";
    return 0;
  }
  if (op == "ht-slopes") {
    const std::string& spec = arg(1);
    Rat f = spec.find('[') != std::string::npos
                ? cf_eval(ContFrac::parse(spec))
                : Rat::parse(spec);
    std::vector<Slope> slopes =
        calibrate.empty() ? two_bridge_boundary_slopes(f)
                          : two_bridge_boundary_slopes(
                                f, Slope::parse(calibrate));
    if (o.format == "json") {
      ordered_json j = ordered_json::array();
      for (const auto& s : slopes) j.push_back(s.str());
      out << j.dump() << "\n";
    } else {
      out << "{";
      for (size_t i = 0; i < slopes.size(); ++i)
        out << (i ? ", " : "") << slopes[i].str();
      out << "}\n";
    }
    return 0;
  }
  if (op == "lk") {
    out << linking_number(ContFrac::parse(arg(1))) << "\n";
    return 0;
  }
  throw UsageError("cf: unknown operation '" + op + "'");
}

// --- families ---------------------------------------------------------------

families::FamilyDataset dataset_for_descriptor(const std::string& desc) {
  if (desc.rfind("link:", 0) == 0)
    return families::link_component_slopes(ContFrac::parse(desc.substr(5)));
  if (desc.rfind("torti:", 0) == 0) {
    std::string body = desc.substr(6);
    size_t comma = body.rfind(',');
    if (comma == std::string::npos)
      throw UsageError("torti descriptor: torti:<frac>,<n>");
    Rat f = Rat::parse(body.substr(0, comma));
    Rat n = Rat::parse(body.substr(comma + 1));
    if (!n.is_integer()) throw UsageError("torti: n must be an integer");
    return families::torti_rational_slopes(f, n.num());
  }
  return families::family_dataset(families::parse_family(desc));
}

int cmd_families(Options& o, std::ostream& out) {
  if (o.rest.empty()) throw UsageError("families: missing descriptor");
  const std::string desc = o.rest[0];
  if (desc.rfind("magic:", 0) == 0) {
    std::string body = desc.substr(6);
    size_t comma = body.find(',');
    if (comma == std::string::npos)
      throw UsageError("magic descriptor: magic:<u>,<r>");
    Rat u = Rat::parse(body.substr(0, comma));
    if (!u.is_integer()) throw UsageError("magic: u must be an integer");
    Slope r = Slope::parse(body.substr(comma + 1));
    auto m = families::magic_filling_params(u.num(), r);
    if (o.format == "json") {
      ordered_json j;
      j["chain_slope"] = m.chain_slope.str();
      j["filling_slope"] = m.filling_slope.str();
      j["exceptional"] = m.exceptional;
      out << j.dump() << "\n";
    } else {
      out << "(" << m.chain_slope.str() << ", " << m.filling_slope.str()
          << ")" << (m.exceptional ? " exceptional" : " not exceptional")
          << "\n";
    }
    return 0;
  }
  bool emit_dataset = flag_present(o.rest, "--emit-dataset");
  families::FamilyDataset d = dataset_for_descriptor(desc);
  if (o.mirror) d = families::mirrored(d);
  if (emit_dataset) {
    out << dataset_json(conj::from_family(d)).dump(2) << "\n";
    return 0;
  }
  if (o.format == "json")
    out << family_json(d).dump() << "\n";
  else
    out << d.label << " " << d.display_text() << "\n";
  return 0;
}

// --- verify -----------------------------------------------------------------

int verify_datasets(const std::vector<conj::SlopeDataset>& datasets,
                    Options& o, std::ostream& out, bool probe) {
  int fails = 0, holds = 0, unknown = 0;
  ordered_json lines = ordered_json::array();
  for (const auto& raw : datasets) {
    conj::SlopeDataset d = o.mirror ? raw.mirrored() : raw;
    conj::Verdict c1 = conj::check_bounding_pair(d);
    conj::Verdict c6;
    if (d.exceptional.empty()) {
      c6.status = conj::Status::Holds;
      c6.reason = "vacuous: no non-trivial exceptional surgeries";
    } else {
      c6 = conj::check_nit_refinement(d);
    }
    for (const auto* v : {&c1, &c6}) {
      switch (v->status) {
        case conj::Status::Holds: ++holds; break;
        case conj::Status::Unknown: ++unknown; break;
        case conj::Status::Fails: ++fails; break;
      }
    }
    std::optional<conj::SingleWitnessReport> rep;
    if (probe && c6.status == conj::Status::Holds && c6.case_id == 3)
      rep = conj::single_witness_probe(d);
    if (o.format == "json") {
      ordered_json j;
      j["name"] = d.name;
      j["conj1"] = verdict_json(c1);
      j["conj6"] = verdict_json(c6);
      if (rep) {
        j["single_witness"] =
            rep->single_witness ? rep->single_witness->str() : "";
        j["counterexample_candidate"] = rep->counterexample_candidate;
      }
      lines.push_back(j);
    } else {
      out << d.name << "  C1: " << c1.str() << "  C2: " << c6.str();
      if (rep) out << "  [" << rep->note << "]";
      out << "\n";
    }
  }
  if (o.format == "json")
    out << lines.dump(2) << "\n";
  else if (!o.quiet)
    out << "summary: " << holds << " Holds, " << unknown << " Unknown, "
        << fails << " Fails\n";
  return fails > 0 ? 1 : 0;
}

int cmd_verify(Options& o, std::ostream& out) {
  std::string family = flag_value(o.rest, "--family");
  std::string dataset_file = flag_value(o.rest, "--dataset");
  std::string census_file = flag_value(o.rest, "--census");
  std::string kind_name = flag_value(o.rest, "--kind");
  bool embedded = flag_present(o.rest, "--embedded");
  bool probe = flag_present(o.rest, "--probe");

  if (!family.empty()) {
    auto fd = dataset_for_descriptor(family);
    return verify_datasets({conj::from_family(fd)}, o, out, probe);
  }
  if (!dataset_file.empty()) {
    std::ifstream in(dataset_file);
    if (!in) throw UsageError("cannot open " + dataset_file);
    ordered_json j = ordered_json::parse(in);
    std::vector<conj::SlopeDataset> ds;
    if (j.is_array())
      for (const auto& item : j) ds.push_back(dataset_from_json(item));
    else
      ds.push_back(dataset_from_json(j));
    return verify_datasets(ds, o, out, probe);
  }
  if (!census_file.empty() || embedded) {
    std::vector<census::CensusRecord> records;
    if (embedded) {
      records = census::embedded_records();
    } else {
      std::ifstream in(census_file);
      if (!in) throw UsageError("cannot open " + census_file);
      std::stringstream buf;
      buf << in.rdbuf();
      census::FileKind kind = census::FileKind::Verified;
      if (kind_name == "toronly") kind = census::FileKind::TorOnly;
      else if (kind_name == "remaining") kind = census::FileKind::Remaining;
      else if (kind_name != "verified" && !kind_name.empty())
        throw UsageError("unknown census kind '" + kind_name + "'");
      auto res = census::parse_csv(buf.str(), kind);
      if (!res.errors.empty()) throw UsageError(res.errors.front());
      records = std::move(res.records);
    }
    std::vector<conj::SlopeDataset> ds;
    for (const auto& r : records) ds.push_back(census::to_dataset(r));
    return verify_datasets(ds, o, out, probe);
  }
  throw UsageError("verify: need --family, --dataset, --census or --embedded");
}

// --- census -----------------------------------------------------------------

census::FileKind parse_kind(const std::string& k) {
  if (k == "toronly") return census::FileKind::TorOnly;
  if (k == "verified" || k.empty()) return census::FileKind::Verified;
  if (k == "remaining") return census::FileKind::Remaining;
  throw UsageError("unknown census kind '" + k + "'");
}

std::vector<census::CensusRecord> load_census(const std::string& path,
                                              census::FileKind kind,
                                              std::vector<std::string>* errors) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto res = census::parse_csv(buf.str(), kind);
  if (errors) *errors = res.errors;
  return res.records;
}

int cmd_census(Options& o, std::ostream& out, std::ostream& err) {
  if (o.rest.empty()) throw UsageError("census: missing operation");
  std::string op = o.rest[0];
  std::string kind_name = flag_value(o.rest, "--kind");
  std::string pairs_arg = flag_value(o.rest, "--pairs");

  if (op == "ingest") {
    if (o.rest.size() < 2) throw UsageError("census ingest: missing file");
    std::vector<std::string> errors;
    auto records = load_census(o.rest[1], parse_kind(kind_name), &errors);
    if (o.mirror)
      for (auto& r : records) r = r.mirrored();
    if (o.format == "csv") {
      out << census::write_csv(records, parse_kind(kind_name));
    } else if (o.format == "json") {
      ordered_json j;
      j["records"] = records.size();
      j["errors"] = errors;
      out << j.dump(2) << "\n";
    } else if (!o.quiet) {
      out << "ingested " << records.size() << " records, " << errors.size()
          << " errors\n";
    }
    for (const auto& e : errors) err << e << "\n";
    return errors.empty() ? 0 : 2;
  }

  if (op == "transform") {
    if (o.rest.size() < 2) throw UsageError("census transform: missing name");
    const std::string& name = o.rest[1];
    census::CoordTransform t;
    if (!pairs_arg.empty()) {
      std::vector<std::pair<Slope, Slope>> pairs;
      std::stringstream ss(pairs_arg);
      std::string tok;
      while (std::getline(ss, tok, ';')) {
        size_t open = tok.find('('), comma = tok.find(','), close = tok.find(')');
        if (open == std::string::npos || comma == std::string::npos ||
            close == std::string::npos)
          throw UsageError("census transform: bad pair '" + tok + "'");
        pairs.push_back(
            {Slope::parse(tok.substr(open + 1, comma - open - 1)),
             Slope::parse(tok.substr(comma + 1, close - comma - 1))});
      }
      t = census::infer_transform(pairs);
    } else {
      auto records = census::embedded_records();
      auto it = std::find_if(records.begin(), records.end(),
                             [&](const census::CensusRecord& r) {
                               return r.name == name;
                             });
      if (it == records.end())
        throw UsageError("census transform: no embedded record named " + name);
      t = census::infer_transform(*it);
    }
    if (o.format == "json") {
      ordered_json j;
      j["name"] = name;
      j["eps"] = t.eps;
      j["offset"] = t.offset;
      j["transform"] = t.str();
      out << j.dump() << "\n";
    } else {
      out << t.str() << "\n";
    }
    return 0;
  }

  if (op == "report") {
    std::vector<census::CensusRecord> records;
    std::vector<std::string> errors;
    if (o.rest.size() >= 2)
      records = load_census(o.rest[1], parse_kind(kind_name), &errors);
    else
      records = census::embedded_records();
    if (o.mirror)
      for (auto& r : records) r = r.mirrored();
    auto report = census::batch_verify(records);
    for (const auto& e : errors) report.errors.push_back(e);
    if (o.format == "json") {
      ordered_json j;
      j["no_exceptional"] = report.no_exceptional;
      j["toroidal_only"] = report.toroidal_only;
      j["conj1"] = {{"holds", report.holds_c1},
                    {"unknown", report.unknown_c1},
                    {"fails", report.fails_c1}};
      j["conj6"] = {{"holds", report.holds_c6},
                    {"unknown", report.unknown_c6},
                    {"fails", report.fails_c6}};
      j["records"] = ordered_json::array();
      for (const auto& rv : report.records) {
        ordered_json r;
        r["name"] = rv.name;
        r["conj1"] = verdict_json(rv.bounding);
        r["conj6"] = verdict_json(rv.nit);
        j["records"].push_back(r);
      }
      j["errors"] = report.errors;
      out << j.dump(2) << "\n";
    } else {
      out << report.text();
    }
    if (!report.errors.empty()) return 2;
    return report.any_fails() ? 1 : 0;
  }

  throw UsageError("census: unknown operation '" + op + "'");
}

// --- norm -------------------------------------------------------------------

int cmd_norm(Options& o, std::ostream& out) {
  if (o.rest.empty()) throw UsageError("norm: missing operation");
  std::string op = o.rest[0];
  auto need = [&](const char* name) {
    std::string v = flag_value(o.rest, name);
    if (v.empty()) throw UsageError(std::string("norm: missing ") + name);
    return v;
  };
  if (op == "bound") {
    Rat b = csnorm::finite_norm_bound(Rat::parse(need("--s")));
    out << b.str() << "\n";
    return 0;
  }
  if (op == "interval") {
    bool ok = csnorm::finite_slope_interval_check(
        Slope::parse(need("--t")), Slope::parse(need("--rm")),
        Slope::parse(need("--rM")));
    out << (ok ? "true" : "false") << "\n";
    return 0;
  }
  if (op == "width") {
    std::string parity_name = need("--parity");
    csnorm::Parity parity;
    if (parity_name == "integer") parity = csnorm::Parity::Integer;
    else if (parity_name == "half" || parity_name == "half-integer")
      parity = csnorm::Parity::HalfInteger;
    else
      throw UsageError("norm: parity must be integer or half");
    Rat n = Rat::parse(need("--n"));
    if (!n.is_integer()) throw UsageError("norm: --n must be an integer");
    auto d = csnorm::NormData::make(
        Rat::parse(need("--s")), Rat::parse(need("--m")),
        Rat::parse(need("--t")), Slope::parse(need("--rM")), n.num(), parity);
    Rat w1 = csnorm::width_at_one(d);
    bool contradiction = w1 > Rat(1);
    if (o.format == "json") {
      ordered_json j;
      j["w1"] = w1.str();
      j["contradiction"] = contradiction;
      out << j.dump() << "\n";
    } else {
      out << "w(1) = " << w1.str() << "\n"
          << "lattice contradiction: " << (contradiction ? "true" : "false")
          << "\n";
    }
    return 0;
  }
  throw UsageError("norm: unknown operation '" + op + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    Options o = preprocess(args);
    if (o.rest.empty()) {
      err << kUsage;
      return 2;
    }
    std::string cmd = o.rest[0];
    o.rest.erase(o.rest.begin());
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      out << kUsage;
      return 0;
    }
    if (cmd == "cf") return cmd_cf(o, out);
    if (cmd == "families") return cmd_families(o, out);
    if (cmd == "verify") return cmd_verify(o, out);
    if (cmd == "census") return cmd_census(o, out, err);
    if (cmd == "norm") return cmd_norm(o, out);
    err << "unknown command '" << cmd << "'\n" << kUsage;
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace knots::cli
