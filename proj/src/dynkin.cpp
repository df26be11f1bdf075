#include "residua/dynkin.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "residua/errors.hpp"

namespace residua {

bool WeightedDiagram::labels_nonnegative() const {
  for (const Rat& x : labels)
    if (sgn(x) < 0) return false;
  return true;
}

bool WeightedDiagram::normalized_labels_in_02() const {
  for (const Rat& x : normalized_labels)
    if (x != 0 && x != 2) return false;
  return true;
}

WeightedDiagram weighted_diagram(const RootSystem& R, const ParameterFunction& k,
                                 const QVec& center) {
  if (!k.is_equal_parameter())
    throw DomainError("weighted diagrams are defined for equal parameters only; got " +
                      k.canonical_string(R));
  WeightedDiagram d;
  d.dominant_center = R.dominant_representative(center).first;
  d.labels.reserve(R.simple_roots.size());
  for (const QVec& alpha : R.simple_roots) d.labels.push_back(dot(alpha, d.dominant_center));
  const Rat& kv = k.by_class[0];
  d.normalized_labels = d.labels;
  if (sgn(kv) != 0)
    for (Rat& x : d.normalized_labels) x *= frac(2) / kv;
  return d;
}

std::string diagram_dot(const RootSystem& R, const WeightedDiagram& d) {
  std::ostringstream os;
  os << "graph dynkin {\n";
  for (std::size_t i = 0; i < R.simple_roots.size(); ++i)
    os << "  n" << i << " [label=\"a" << i + 1 << "=" << rat_str(d.labels[i]) << "\"];\n";
  for (std::size_t i = 0; i < R.simple_roots.size(); ++i) {
    for (std::size_t j = i + 1; j < R.simple_roots.size(); ++j) {
      const QVec& a = R.simple_roots[i];
      const QVec& b = R.simple_roots[j];
      Rat bond = frac(4) * dot(a, b) * dot(a, b) / (norm_sq(a) * norm_sq(b));
      if (sgn(bond) == 0) continue;
      os << "  n" << i << " -- n" << j;
      if (bond != 1) os << " [label=\"" << rat_str(bond) << "\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::map<std::string, BalaCarterFixture> load_bala_carter_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open fixture file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("malformed fixture file " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("fixture file " + path + " must hold one object");
  std::map<std::string, BalaCarterFixture> out;
  for (const auto& [type, entry] : doc.items()) {
    if (!entry.is_object() || !entry.contains("distinguished") || !entry.contains("nilpotent"))
      throw ConfigError("fixture entry " + type + " needs distinguished and nilpotent counts");
    BalaCarterFixture f;
    f.distinguished = entry.at("distinguished").get<long>();
    f.nilpotent = entry.at("nilpotent").get<long>();
    f.source = entry.value("source", "");
    out[type] = f;
  }
  return out;
}

BalaCarterCounts bala_carter_counts(const RootSystem& R, const ParameterFunction& k,
                                    const OrbitTable& table,
                                    const std::map<std::string, BalaCarterFixture>& fixtures) {
  if (!k.is_equal_parameter())
    throw DomainError("orbit-count comparison is defined for equal parameters only");

  BalaCarterCounts out;
  out.type = R.label;
  out.distinguished_expected = 1;
  out.nilpotent_expected = 1;
  for (const Factor& f : R.factors) {
    std::string key = std::string(1, f.letter) + std::to_string(f.rank);
    auto it = fixtures.find(key);
    if (it == fixtures.end())
      throw ConfigError("no fixture entry for type " + key);
    out.distinguished_expected *= it->second.distinguished;
    out.nilpotent_expected *= it->second.nilpotent;
  }

  out.total_orbits_found = table.orbits.size();
  for (const ResidualOrbit& o : table.orbits) {
    if (o.rep.dim() != 0) continue;
    ++out.distinguished_found;
    WeightedDiagram d = weighted_diagram(R, k, o.rep.flat.center);
    if (!d.normalized_labels_in_02())
      out.findings.push_back({d.dominant_center, d.normalized_labels});
  }
  out.match = static_cast<long>(out.distinguished_found) == out.distinguished_expected &&
              static_cast<long>(out.total_orbits_found) == out.nilpotent_expected;
  return out;
}

}  // namespace residua
