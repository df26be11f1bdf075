#include "residua/serialize.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "residua/errors.hpp"

namespace residua {

namespace {

using njson = nlohmann::ordered_json;

// All float output funnels through the JSON dumper so that every format
// prints the shortest round-trip decimal for the same bits.
std::string fmt_double(double x) { return njson(x).dump(); }

njson params_obj(const RootSystem& R, const ParameterFunction& k) {
  njson o = njson::object();
  for (std::size_t c = 0; c < R.class_names.size(); ++c)
    o[R.class_names[c]] = rat_str(k.by_class[c]);
  return o;
}

// Class=value pairs joined with ';' (CSV fields must stay comma-free).
std::string params_csv(const RootSystem& R, const ParameterFunction& k) {
  std::string out;
  for (std::size_t c = 0; c < R.class_names.size(); ++c) {
    if (c) out += ';';
    out += R.class_names[c] + "=" + rat_str(k.by_class[c]);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string dims_str(const std::vector<std::size_t>& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(dims[i]);
  }
  return out;
}

njson orbit_row(const ResidualOrbit& o) {
  njson row = njson::object();
  row["dim"] = o.rep.dim();
  row["i"] = o.rep.report.index;
  row["o"] = o.rep.report.order;
  row["center"] = qvec_strings(o.rep.flat.center);
  njson basis = njson::array();
  for (const QVec& r : o.rep.flat.direction) basis.push_back(qvec_strings(r));
  row["direction_basis"] = basis;
  row["orbit_size"] = o.orbit_size;
  row["parabolic_type"] = o.parabolic_type;
  row["witness_chain_dims"] = o.witness_chain_dims;
  return row;
}

std::string tuple_str(const QVec& v) { return "(" + join(qvec_strings(v), ", ") + ")"; }

std::string rats_str(const std::vector<Rat>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(v[i]);
  }
  return out + ")";
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string head_line(const RootSystem& R, const ParameterFunction& k) {
  return "type " + R.label + "  rank " + std::to_string(R.span_dim) + "  params " +
         k.canonical_string(R) + "\n";
}

}  // namespace

std::string table_json(const RootSystem& R, const OrbitTable& table) {
  njson j = njson::object();
  j["schema_version"] = kSchemaVersion;
  j["type"] = table.type;
  j["rank"] = table.rank;
  j["params"] = params_obj(R, table.params);
  njson orbits = njson::array();
  for (const ResidualOrbit& o : table.orbits) orbits.push_back(orbit_row(o));
  j["orbits"] = orbits;
  return j.dump(2) + "\n";
}

std::string table_csv(const RootSystem& R, const OrbitTable& table) {
  std::string out =
      "schema_version,type,rank,params,dim,i,o,center,direction_basis,orbit_size,"
      "parabolic_type,witness_chain_dims\n";
  std::string prefix = std::to_string(kSchemaVersion) + "," + table.type + "," +
                       std::to_string(table.rank) + "," + params_csv(R, table.params) + ",";
  for (const ResidualOrbit& o : table.orbits) {
    std::vector<std::string> basis_rows;
    for (const QVec& r : o.rep.flat.direction) basis_rows.push_back(join(qvec_strings(r), " "));
    out += prefix + std::to_string(o.rep.dim()) + "," + std::to_string(o.rep.report.index) +
           "," + std::to_string(o.rep.report.order) + "," +
           join(qvec_strings(o.rep.flat.center), " ") + "," + join(basis_rows, ";") + "," +
           std::to_string(o.orbit_size) + "," + o.parabolic_type + "," +
           dims_str(o.witness_chain_dims) + "\n";
  }
  return out;
}

std::string table_text(const RootSystem& R, const OrbitTable& table) {
  std::ostringstream out;
  out << head_line(R, table.params);
  out << "orbits " << table.orbits.size() << "\n";
  out << std::left << std::setw(5) << "dim" << std::setw(5) << "i" << std::setw(5) << "o"
      << std::setw(7) << "size" << std::setw(11) << "parabolic"
      << "center\n";
  for (const ResidualOrbit& o : table.orbits) {
    out << std::left << std::setw(5) << o.rep.dim() << std::setw(5) << o.rep.report.index
        << std::setw(5) << o.rep.report.order << std::setw(7) << o.orbit_size << std::setw(11)
        << o.parabolic_type << tuple_str(o.rep.flat.center) << "\n";
  }
  return out.str();
}

OrbitTable table_from_json(const std::string& text) {
  try {
    njson j = njson::parse(text);
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw ConfigError("unsupported schema_version");
    OrbitTable table;
    table.type = j.at("type").get<std::string>();
    table.rank = j.at("rank").get<std::size_t>();
    RootSystem R = RootSystem::build(table.type);
    std::map<std::string, Rat> named;
    for (const auto& [name, value] : j.at("params").items())
      named[name] = parse_rat(value.get<std::string>());
    table.params = ParameterFunction::from_named(R, named);
    for (const njson& row : j.at("orbits")) {
      ResidualCoset rep;
      QVec center = qvec_from_strings(row.at("center").get<std::vector<std::string>>());
      QMat direction;
      for (const njson& b : row.at("direction_basis"))
        direction.push_back(qvec_from_strings(b.get<std::vector<std::string>>()));
      rep.flat = AffineFlat::from_point_direction(center, direction);
      rep.report.index = row.at("i").get<long>();
      rep.report.order = row.at("o").get<long>();
      rep.report.codim = static_cast<long>(table.rank) - static_cast<long>(rep.flat.dim());
      if (rep.dim() != row.at("dim").get<std::size_t>())
        throw ConfigError("orbit row dim does not match its direction basis");
      ResidualOrbit orbit;
      orbit.rep_index = table.cosets.size();
      orbit.rep = rep;
      orbit.members = {table.cosets.size()};
      orbit.orbit_size = row.at("orbit_size").get<unsigned long long>();
      orbit.parabolic_type = row.at("parabolic_type").get<std::string>();
      orbit.witness_chain_dims = row.at("witness_chain_dims").get<std::vector<std::size_t>>();
      table.cosets.push_back(rep);
      table.orbits.push_back(std::move(orbit));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed orbit table JSON: ") + e.what());
  }
}

std::string report_json(const RootSystem& R, const ParameterFunction& k,
                        const VerificationReport& report) {
  njson j = njson::object();
  j["schema_version"] = kSchemaVersion;
  j["type"] = R.label;
  j["rank"] = R.span_dim;
  j["params"] = params_obj(R, k);
  njson checks = njson::array();
  for (const CheckResult& c : report.checks) {
    njson row = njson::object();
    row["id"] = c.id;
    row["alias"] = c.alias;
    row["passed"] = c.passed;
    row["details"] = c.details;
    row["counterexamples"] = c.counterexamples;
    checks.push_back(row);
  }
  j["checks"] = checks;
  j["all_passed"] = report.all_passed();
  return j.dump(2) + "\n";
}

std::string report_text(const RootSystem& R, const ParameterFunction& k,
                        const VerificationReport& report) {
  std::string out = head_line(R, k);
  for (const CheckResult& c : report.checks) {
    out += std::string(c.passed ? "PASS" : "FAIL") + " " + c.id + " (" + c.alias + "): " +
           c.details + "\n";
    for (const std::string& ce : c.counterexamples) out += "    counterexample " + ce + "\n";
  }
  out += std::string("result: ") + (report.all_passed() ? "all checks passed" : "FAILURES") +
         "\n";
  return out;
}

namespace {

njson counts_obj(const std::map<std::size_t, std::size_t>& counts) {
  njson o = njson::object();
  for (const auto& [dim, n] : counts) o[std::to_string(dim)] = n;
  return o;
}

std::string counts_str(const std::map<std::size_t, std::size_t>& counts) {
  std::string out;
  for (const auto& [dim, n] : counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(dim) + ":" + std::to_string(n);
  }
  return out;
}

bool is_wall(const ScanReport& report, const Rat& ratio) {
  for (const Rat& w : report.walls)
    if (w == ratio) return true;
  return false;
}

}  // namespace

std::string scan_json(const RootSystem& R, const ScanReport& report) {
  njson j = njson::object();
  j["schema_version"] = kSchemaVersion;
  j["type"] = report.type;
  j["rank"] = R.span_dim;
  j["single_class"] = report.single_class;
  njson points = njson::array();
  for (const ScanPoint& p : report.points) {
    njson row = njson::object();
    row["ratio"] = rat_str(p.ratio);
    row["params"] = params_obj(R, p.params);
    row["orbit_counts"] = counts_obj(p.orbit_counts);
    row["flat_counts"] = counts_obj(p.flat_counts);
    row["total_orbits"] = p.total_orbits;
    row["point_orbits"] = p.point_orbits;
    points.push_back(row);
  }
  j["points"] = points;
  njson walls = njson::array();
  for (const Rat& w : report.walls) walls.push_back(rat_str(w));
  j["walls"] = walls;
  njson segments = njson::array();
  for (const auto& [a, b] : report.segments) segments.push_back(njson::array({a, b}));
  j["segments"] = segments;
  return j.dump(2) + "\n";
}

std::string scan_csv(const RootSystem& R, const ScanReport& report) {
  std::string out =
      "schema_version,type,ratio,params,total_orbits,point_orbits,orbit_counts,flat_counts,"
      "is_wall\n";
  for (const ScanPoint& p : report.points) {
    out += std::to_string(kSchemaVersion) + "," + report.type + "," + rat_str(p.ratio) + "," +
           params_csv(R, p.params) + "," + std::to_string(p.total_orbits) + "," +
           std::to_string(p.point_orbits) + "," + counts_str(p.orbit_counts) + "," +
           counts_str(p.flat_counts) + "," + (is_wall(report, p.ratio) ? "1" : "0") + "\n";
  }
  return out;
}

std::string scan_text(const RootSystem& R, const ScanReport& report) {
  std::ostringstream out;
  out << "type " << report.type << "  rank " << R.span_dim << "  "
      << (report.single_class ? "single-class grid" : "ratio grid short/long") << "\n";
  out << std::left << std::setw(9) << "ratio" << std::setw(8) << "orbits" << std::setw(8)
      << "points" << std::setw(20) << "orbits by dim"
      << "wall\n";
  for (const ScanPoint& p : report.points) {
    out << std::left << std::setw(9) << rat_str(p.ratio) << std::setw(8) << p.total_orbits
        << std::setw(8) << p.point_orbits << std::setw(20) << counts_str(p.orbit_counts)
        << (is_wall(report, p.ratio) ? "yes" : "") << "\n";
  }
  out << "segments";
  for (const auto& [a, b] : report.segments)
    out << " [" << rat_str(report.points[a].ratio) << ", " << rat_str(report.points[b].ratio)
        << "]";
  out << "\n";
  return out.str();
}

std::string dynkin_json(const RootSystem& R, const OrbitTable& table,
                        const std::vector<WeightedDiagram>& diagrams,
                        const BalaCarterCounts& counts) {
  njson j = njson::object();
  j["schema_version"] = kSchemaVersion;
  j["type"] = table.type;
  j["rank"] = table.rank;
  j["params"] = params_obj(R, table.params);
  std::vector<ResidualOrbit> points = table.point_orbits();
  njson rows = njson::array();
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    njson row = njson::object();
    row["center"] = qvec_strings(diagrams[i].dominant_center);
    njson labels = njson::array();
    for (const Rat& r : diagrams[i].labels) labels.push_back(rat_str(r));
    row["labels"] = labels;
    njson norm = njson::array();
    for (const Rat& r : diagrams[i].normalized_labels) norm.push_back(rat_str(r));
    row["normalized_labels"] = norm;
    if (i < points.size()) {
      row["orbit_size"] = points[i].orbit_size;
      row["parabolic_type"] = points[i].parabolic_type;
    }
    rows.push_back(row);
  }
  j["diagrams"] = rows;
  njson c = njson::object();
  c["distinguished_expected"] = counts.distinguished_expected;
  c["nilpotent_expected"] = counts.nilpotent_expected;
  c["distinguished_found"] = counts.distinguished_found;
  c["total_orbits_found"] = counts.total_orbits_found;
  c["match"] = counts.match;
  j["counts"] = c;
  njson findings = njson::array();
  for (const DiagramFinding& f : counts.findings) {
    njson row = njson::object();
    row["center"] = qvec_strings(f.center);
    njson norm = njson::array();
    for (const Rat& r : f.normalized_labels) norm.push_back(rat_str(r));
    row["normalized_labels"] = norm;
    findings.push_back(row);
  }
  j["findings"] = findings;
  return j.dump(2) + "\n";
}

std::string dynkin_text(const RootSystem& R, const OrbitTable& table,
                        const std::vector<WeightedDiagram>& diagrams,
                        const BalaCarterCounts& counts) {
  std::string out = head_line(R, table.params);
  out += "distinguished found " + std::to_string(counts.distinguished_found) + " expected " +
         std::to_string(counts.distinguished_expected) + "; orbits found " +
         std::to_string(counts.total_orbits_found) + " expected " +
         std::to_string(counts.nilpotent_expected) + "; match " +
         (counts.match ? "yes" : "NO") + "\n";
  std::vector<ResidualOrbit> points = table.point_orbits();
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    out += "diagram " + rats_str(diagrams[i].labels) + "  center " +
           tuple_str(diagrams[i].dominant_center);
    if (i < points.size())
      out += "  orbit " + std::to_string(points[i].orbit_size) + "  parabolic " +
             points[i].parabolic_type;
    out += "\n";
  }
  for (const DiagramFinding& f : counts.findings)
    out += "finding: center " + tuple_str(f.center) + " normalized " +
           rats_str(f.normalized_labels) + " outside {0, 2}\n";
  return out;
}

std::string spectrum_json(const RankOneSpectrum& s) {
  njson j = njson::object();
  j["schema_version"] = kSchemaVersion;
  j["q"] = s.q;
  njson masses = njson::array();
  for (const auto& pm : s.point_masses) {
    njson row = njson::object();
    row["t"] = pm.location;
    row["mass"] = pm.mass;
    masses.push_back(row);
  }
  j["point_masses"] = masses;
  j["continuous_total"] = s.continuous_total;
  njson density = njson::array();
  for (const auto& [angle, value] : s.density_samples)
    density.push_back(njson::array({angle, value}));
  j["density"] = density;
  j["total"] = s.total;
  return j.dump(2) + "\n";
}

std::string spectrum_text(const RankOneSpectrum& s) {
  std::string out = "q " + fmt_double(s.q) + "\n";
  for (const auto& pm : s.point_masses)
    out += "point mass at " + pm.location + " (t = " + fmt_double(pm.t) +
           "): " + fmt_double(pm.mass) + "\n";
  out += "continuous total " + fmt_double(s.continuous_total) + "\n";
  out += "total " + fmt_double(s.total) + "\n";
  return out;
}

std::string density_csv(const RankOneSpectrum& s) {
  std::string out = "schema_version,angle,value\n";
  for (const auto& [angle, value] : s.density_samples)
    out += std::to_string(kSchemaVersion) + "," + fmt_double(angle) + "," + fmt_double(value) +
           "\n";
  return out;
}

std::string diff_json(const RootSystem& R, const ParameterFunction& k,
                      const FlatSetDiff& diff, std::size_t a_count, std::size_t b_count) {
  njson j = njson::object();
  j["schema_version"] = kSchemaVersion;
  j["type"] = R.label;
  j["rank"] = R.span_dim;
  j["params"] = params_obj(R, k);
  j["equal"] = diff.equal();
  j["enumerator_flats"] = a_count;
  j["oracle_flats"] = b_count;
  njson only_a = njson::array();
  for (const AffineFlat& f : diff.only_a) only_a.push_back(f.key());
  j["only_enumerator"] = only_a;
  njson only_b = njson::array();
  for (const AffineFlat& f : diff.only_b) only_b.push_back(f.key());
  j["only_oracle"] = only_b;
  return j.dump(2) + "\n";
}

std::string diff_text(const RootSystem& R, const ParameterFunction& k,
                      const FlatSetDiff& diff, std::size_t a_count, std::size_t b_count) {
  std::string out = head_line(R, k);
  if (diff.equal()) {
    out += "identical flat sets (" + std::to_string(a_count) + " flats)\n";
    return out;
  }
  out += "MISMATCH: enumerator " + std::to_string(a_count) + " flats, oracle " +
         std::to_string(b_count) + " flats\n";
  for (const AffineFlat& f : diff.only_a) out += "  only enumerator: " + f.key() + "\n";
  for (const AffineFlat& f : diff.only_b) out += "  only oracle: " + f.key() + "\n";
  return out;
}

std::string cache_file_name(const RootSystem& R, const ParameterFunction& k) {
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016" PRIx64,
                static_cast<uint64_t>(fnv1a64(k.canonical_string(R))));
  return R.label + "-" + std::to_string(R.span_dim) + "-" + hex + ".json";
}

}  // namespace residua
