#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "residua/errors.hpp"
#include "residua/serialize.hpp"

namespace py = pybind11;
using namespace residua;

namespace {

// Rationals cross the boundary as "p/q" strings in both directions; the
// Python wrapper turns them into fractions.Fraction where useful.

ParameterFunction named_params(const RootSystem& R,
                               const std::map<std::string, std::string>& params) {
  std::map<std::string, Rat> named;
  for (const auto& [name, value] : params) named[name] = parse_rat(value);
  return ParameterFunction::from_named(R, named);
}

EnumLimits make_limits(std::size_t max_flats, std::size_t max_scanned, unsigned threads) {
  EnumLimits l;
  l.max_flats = max_flats;
  l.max_scanned = max_scanned;
  l.threads = threads;
  return l;
}

struct Run {
  RootSystem R;
  ParameterFunction k;
  OrbitTable table;
};

Run run_enumerate(const std::string& type, const std::map<std::string, std::string>& params,
                  std::size_t max_flats, std::size_t max_scanned, unsigned threads) {
  RootSystem R = RootSystem::build(type);
  ParameterFunction k = named_params(R, params);
  OrbitTable table = enumerate_residual(R, k, make_limits(max_flats, max_scanned, threads));
  return {std::move(R), std::move(k), std::move(table)};
}

constexpr std::size_t kDefaultFlats = EnumLimits{}.max_flats;
constexpr std::size_t kDefaultScanned = EnumLimits{}.max_scanned;

}  // namespace

PYBIND11_MODULE(_residua, m) {
  m.doc() =
      "Residual cosets of shifted root-hyperplane arrangements: exact "
      "enumeration, verification checks, parameter scans, weighted diagrams, "
      "and the rank-1 spectral decomposition. Structured results are JSON "
      "strings; the residua package parses them.";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def(
      "root_system_info",
      [](const std::string& type) {
        RootSystem R = RootSystem::build(type);
        py::dict d;
        d["label"] = R.label;
        d["rank"] = R.span_dim;
        d["ambient_dim"] = R.ambient_dim;
        d["num_roots"] = R.num_roots();
        d["class_names"] = R.class_names;
        d["weyl_order"] = R.weyl_order.get_str();
        return d;
      },
      py::arg("type"), "Basic data of a root system label.");

  m.def(
      "enumerate_json",
      [](const std::string& type, const std::map<std::string, std::string>& params,
         std::size_t max_flats, std::size_t max_scanned, unsigned threads) {
        Run r = run_enumerate(type, params, max_flats, max_scanned, threads);
        return table_json(r.R, r.table);
      },
      py::arg("type"), py::arg("params"), py::arg("max_flats") = kDefaultFlats,
      py::arg("max_scanned") = kDefaultScanned, py::arg("threads") = 1,
      "Residual orbit table as schema JSON.");

  m.def(
      "enumerate_csv",
      [](const std::string& type, const std::map<std::string, std::string>& params,
         std::size_t max_flats, std::size_t max_scanned, unsigned threads) {
        Run r = run_enumerate(type, params, max_flats, max_scanned, threads);
        return table_csv(r.R, r.table);
      },
      py::arg("type"), py::arg("params"), py::arg("max_flats") = kDefaultFlats,
      py::arg("max_scanned") = kDefaultScanned, py::arg("threads") = 1,
      "Residual orbit table as CSV.");

  m.def(
      "verify_json",
      [](const std::string& type, const std::map<std::string, std::string>& params,
         const std::vector<std::string>& checks, std::size_t lattice_codim_cap,
         std::size_t oracle_cap, unsigned threads) {
        Run r = run_enumerate(type, params, kDefaultFlats, kDefaultScanned, threads);
        VerifyOptions vo;
        vo.only = checks;
        vo.lattice_codim_cap = lattice_codim_cap;
        vo.oracle_cap = oracle_cap;
        return report_json(r.R, r.k, verify_all(r.R, r.k, r.table, vo));
      },
      py::arg("type"), py::arg("params"), py::arg("checks") = std::vector<std::string>{},
      py::arg("lattice_codim_cap") = VerifyOptions{}.lattice_codim_cap,
      py::arg("oracle_cap") = VerifyOptions{}.oracle_cap, py::arg("threads") = 1,
      "Verification report as JSON; empty checks runs everything.");

  m.def(
      "scan_json",
      [](const std::string& type, const std::vector<std::string>& ratios, unsigned threads) {
        RootSystem R = RootSystem::build(type);
        std::vector<Rat> grid;
        for (const std::string& s : ratios) grid.push_back(parse_rat(s));
        EnumLimits limits;
        limits.threads = threads;
        return scan_json(R, scan_parameters(R, grid, limits));
      },
      py::arg("type"), py::arg("ratios"), py::arg("threads") = 1,
      "Parameter scan report as JSON.");

  m.def(
      "dynkin_json",
      [](const std::string& type, const std::map<std::string, std::string>& params,
         const std::string& fixtures_path, unsigned threads) {
        Run r = run_enumerate(type, params, kDefaultFlats, kDefaultScanned, threads);
        auto fixtures = load_bala_carter_fixtures(fixtures_path);
        BalaCarterCounts counts = bala_carter_counts(r.R, r.k, r.table, fixtures);
        std::vector<WeightedDiagram> diagrams;
        for (const ResidualOrbit& o : r.table.point_orbits())
          diagrams.push_back(weighted_diagram(r.R, r.k, o.rep.flat.center));
        return dynkin_json(r.R, r.table, diagrams, counts);
      },
      py::arg("type"), py::arg("params"), py::arg("fixtures_path"), py::arg("threads") = 1,
      "Weighted diagrams and orbit count comparison as JSON.");

  m.def(
      "spectrum_json",
      [](const std::string& q, std::size_t samples) {
        return spectrum_json(decompose(parse_rat(q), samples));
      },
      py::arg("q"), py::arg("samples") = 1024,
      "Rank-1 spectral decomposition as JSON; q is a rational string.");

  m.def(
      "density_csv",
      [](const std::string& q, std::size_t samples) {
        return density_csv(decompose(parse_rat(q), samples));
      },
      py::arg("q"), py::arg("samples") = 1024, "Unit-circle density samples as CSV.");

  m.def(
      "diff_oracle_json",
      [](const std::string& type, const std::map<std::string, std::string>& params,
         std::size_t max_codim, std::size_t oracle_cap, std::size_t rank_bound,
         unsigned threads) {
        Run r = run_enumerate(type, params, kDefaultFlats, kDefaultScanned, threads);
        std::vector<AffineFlat> mine;
        for (const ResidualCoset& c : r.table.cosets) mine.push_back(c.flat);
        OracleResult oracle = brute_force_flats(r.R, r.k, max_codim, oracle_cap, rank_bound);
        FlatSetDiff diff = diff_flat_sets(mine, oracle.flats);
        return diff_json(r.R, r.k, diff, mine.size(), oracle.flats.size());
      },
      py::arg("type"), py::arg("params"),
      py::arg("max_codim") = static_cast<std::size_t>(-1), py::arg("oracle_cap") = 2000000,
      py::arg("rank_bound") = 4, py::arg("threads") = 1,
      "Set difference against the brute-force oracle as JSON.");

  m.def(
      "trace_of_one",
      [](double q, double radius, double tol) { return trace_of_one(q, radius, tol); },
      py::arg("q"), py::arg("radius"), py::arg("tol") = 1e-12,
      "Mean of the rank-1 density over a small circle; identically 1.");

  m.def(
      "eta", [](double q, std::complex<double> t) { return rank1_eta(q, t); }, py::arg("q"),
      py::arg("t"), "Rank-1 spectral density eta(t).");

  m.def(
      "cross_check_support",
      [](const std::string& q, const std::string& k) {
        RootSystem R = RootSystem::build("A1");
        ParameterFunction kf = ParameterFunction::equal(R, parse_rat(k));
        return cross_check_support(parse_rat(q), enumerate_residual(R, kf));
      },
      py::arg("q"), py::arg("k"),
      "Match the spectrum of q against the rank-1 orbit table at exponent k.");
}
