#include "doctest.h"
#include "json.hpp"
#include "residua/errors.hpp"
#include "residua/serialize.hpp"

using namespace residua;

namespace {

struct Setup {
  RootSystem R;
  ParameterFunction k;
  OrbitTable table;
};

Setup b2_mixed() {
  RootSystem R = RootSystem::build("B2");
  ParameterFunction k =
      ParameterFunction::from_named(R, {{"long", frac(1)}, {"short", frac(2)}});
  OrbitTable table = enumerate_residual(R, k);
  return {std::move(R), std::move(k), std::move(table)};
}

}  // namespace

TEST_CASE("orbit table JSON carries the full schema") {
  Setup s = b2_mixed();
  std::string text = table_json(s.R, s.table);
  CHECK(text.rfind("{\n  \"schema_version\": 1,\n  \"type\": \"B2\",", 0) == 0);

  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["schema_version"] == 1);
  CHECK(j["type"] == "B2");
  CHECK(j["rank"] == 2);
  CHECK(j["params"]["long"] == "1");
  CHECK(j["params"]["short"] == "2");
  REQUIRE(j["orbits"].size() == s.table.orbits.size());
  const auto& top = j["orbits"][0];
  CHECK(top["dim"] == 2);
  CHECK(top["o"] == 0);
  CHECK(top["orbit_size"] == 1);
  CHECK(top["parabolic_type"] == "0");
  CHECK(top["direction_basis"].size() == 2);
  CHECK(top["witness_chain_dims"] == nlohmann::json::array({2}));
  for (const auto& row : j["orbits"]) {
    CHECK(row["o"] == 0);
    CHECK(row["center"].size() == 2);
  }
}

TEST_CASE("orbit table CSV has one row per orbit with the shared prefix") {
  Setup s = b2_mixed();
  std::string text = table_csv(s.R, s.table);
  std::size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == s.table.orbits.size() + 1);
  CHECK(text.rfind("schema_version,type,rank,params,dim,i,o,center,", 0) == 0);
  CHECK(text.find("\n1,B2,2,long=1;short=2,2,0,0,") != std::string::npos);
}

TEST_CASE("orbit table text rendering lists every orbit") {
  Setup s = b2_mixed();
  std::string text = table_text(s.R, s.table);
  CHECK(text.find("type B2  rank 2  params long=1,short=2") == 0);
  CHECK(text.find("orbits " + std::to_string(s.table.orbits.size())) != std::string::npos);
  CHECK(text.find("parabolic") != std::string::npos);
}

TEST_CASE("table JSON round trips through the parser byte-identically") {
  Setup s = b2_mixed();
  std::string text = table_json(s.R, s.table);
  OrbitTable parsed = table_from_json(text);
  CHECK(parsed.type == s.table.type);
  CHECK(parsed.rank == s.table.rank);
  REQUIRE(parsed.orbits.size() == s.table.orbits.size());
  for (std::size_t i = 0; i < parsed.orbits.size(); ++i) {
    CHECK(parsed.orbits[i].rep.flat == s.table.orbits[i].rep.flat);
    CHECK(parsed.orbits[i].orbit_size == s.table.orbits[i].orbit_size);
  }
  CHECK(table_json(s.R, parsed) == text);
  CHECK(table_csv(s.R, parsed) == table_csv(s.R, s.table));
  CHECK(table_text(s.R, parsed) == table_text(s.R, s.table));
}

TEST_CASE("table parser rejects malformed input") {
  CHECK_THROWS_AS(table_from_json("not json"), ConfigError);
  CHECK_THROWS_AS(table_from_json("{}"), ConfigError);
  CHECK_THROWS_AS(table_from_json("{\"schema_version\": 99}"), ConfigError);
}

TEST_CASE("equal work gives byte-identical JSON across thread counts") {
  RootSystem R = RootSystem::build("G2");
  ParameterFunction k = ParameterFunction::equal(R, frac(1));
  EnumLimits one, four;
  one.threads = 1;
  four.threads = 4;
  std::string a = table_json(R, enumerate_residual(R, k, one));
  std::string b = table_json(R, enumerate_residual(R, k, four));
  CHECK(a == b);
}

TEST_CASE("verification report serializes checks in order") {
  RootSystem R = RootSystem::build("A2");
  ParameterFunction k = ParameterFunction::equal(R, frac(1));
  OrbitTable table = enumerate_residual(R, k);
  VerificationReport report = verify_all(R, k, table);

  nlohmann::json j = nlohmann::json::parse(report_json(R, k, report));
  CHECK(j["schema_version"] == 1);
  CHECK(j["all_passed"] == true);
  REQUIRE(j["checks"].size() == report.checks.size());
  CHECK(j["checks"][0]["id"] == "lattice-order-bound");
  CHECK(j["checks"][0]["alias"] == "T1a");
  CHECK(j["checks"][0]["passed"] == true);

  std::string text = report_text(R, k, report);
  CHECK(text.find("PASS lattice-order-bound (T1a)") != std::string::npos);
  CHECK(text.find("all checks passed") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("scan report serializes grid, walls, and segments") {
  RootSystem R = RootSystem::build("B2");
  ScanReport report = scan_parameters(R, {frac(1, 4), frac(1, 2), frac(3, 4)});

  nlohmann::json j = nlohmann::json::parse(scan_json(R, report));
  CHECK(j["schema_version"] == 1);
  CHECK(j["type"] == "B2");
  CHECK(j["single_class"] == false);
  REQUIRE(j["points"].size() == 3);
  CHECK(j["points"][0]["ratio"] == "1/4");
  CHECK(j["points"][0]["params"]["short"] == "1/4");
  CHECK(j["points"][0]["total_orbits"] == 5);
  CHECK(j["walls"] == nlohmann::json::array({"1/2"}));
  CHECK(j["segments"].size() == 3);

  std::string csv = scan_csv(R, report);
  CHECK(csv.find("1,B2,1/2,long=1;short=1/2,4,1,") != std::string::npos);
  CHECK(csv.find(",1\n") != std::string::npos);  // the wall row is flagged

  std::string text = scan_text(R, report);
  CHECK(text.find("1/2") != std::string::npos);
  CHECK(text.find("yes") != std::string::npos);
}

TEST_CASE("diagram report serializes labels and fixture comparison") {
  RootSystem R = RootSystem::build("A2");
  ParameterFunction k = ParameterFunction::equal(R, frac(2));
  OrbitTable table = enumerate_residual(R, k);
  auto fixtures = load_bala_carter_fixtures(std::string(RESIDUA_DATA_DIR) + "/bala_carter.json");
  BalaCarterCounts counts = bala_carter_counts(R, k, table, fixtures);
  std::vector<WeightedDiagram> diagrams;
  for (const ResidualOrbit& o : table.point_orbits())
    diagrams.push_back(weighted_diagram(R, k, o.rep.flat.center));

  nlohmann::json j = nlohmann::json::parse(dynkin_json(R, table, diagrams, counts));
  CHECK(j["schema_version"] == 1);
  REQUIRE(j["diagrams"].size() == 1);
  CHECK(j["diagrams"][0]["labels"] == nlohmann::json::array({"2", "2"}));
  CHECK(j["diagrams"][0]["orbit_size"] == 6);
  CHECK(j["counts"]["distinguished_expected"] == 1);
  CHECK(j["counts"]["nilpotent_expected"] == 3);
  CHECK(j["counts"]["match"] == true);
  CHECK(j["findings"].empty());

  std::string text = dynkin_text(R, table, diagrams, counts);
  CHECK(text.find("diagram (2, 2)") != std::string::npos);
  CHECK(text.find("match yes") != std::string::npos);
}

TEST_CASE("spectrum JSON matches the published shape") {
  RankOneSpectrum s = decompose(frac(2), 16);
  std::string text = spectrum_json(s);
  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["schema_version"] == 1);
  CHECK(j["q"] == 2.0);
  REQUIRE(j["point_masses"].size() == 1);
  CHECK(j["point_masses"][0]["t"] == "q^-1");
  CHECK(std::abs(j["point_masses"][0]["mass"].get<double>() - 1.0 / 3.0) < 1e-12);
  CHECK(j["density"].size() == 16);
  CHECK(j["density"][0][0] == 0.0);
  CHECK(std::abs(j["total"].get<double>() - 1.0) < 1e-10);

  std::string csv = density_csv(s);
  CHECK(csv.rfind("schema_version,angle,value\n1,0.0,0.0\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 17);

  CHECK(spectrum_text(s).find("point mass at q^-1") != std::string::npos);
}

TEST_CASE("oracle diff serialization reports identity and mismatches") {
  RootSystem R = RootSystem::build("A2");
  ParameterFunction k = ParameterFunction::equal(R, frac(1));
  OrbitTable table = enumerate_residual(R, k);
  std::vector<AffineFlat> mine;
  for (const ResidualCoset& c : table.cosets) mine.push_back(c.flat);
  OracleResult oracle = brute_force_flats(R, k);
  FlatSetDiff diff = diff_flat_sets(mine, oracle.flats);

  nlohmann::json j = nlohmann::json::parse(diff_json(R, k, diff, mine.size(), oracle.flats.size()));
  CHECK(j["equal"] == true);
  CHECK(j["enumerator_flats"] == 13);
  CHECK(j["oracle_flats"] == 13);
  CHECK(j["only_enumerator"].empty());
  CHECK(diff_text(R, k, diff, mine.size(), oracle.flats.size()).find("identical flat sets (13") !=
        std::string::npos);

  FlatSetDiff forced = diff_flat_sets(mine, {});
  std::string text = diff_text(R, k, forced, mine.size(), 0);
  CHECK(text.find("MISMATCH") != std::string::npos);
  CHECK(text.find("only enumerator:") != std::string::npos);
}

TEST_CASE("cache file names separate parameter classes and collide on equality") {
  RootSystem R = RootSystem::build("B2");
  ParameterFunction a = ParameterFunction::from_named(R, {{"long", frac(1)}, {"short", frac(2)}});
  ParameterFunction b = ParameterFunction::from_named(R, {{"long", frac(1)}, {"short", frac(2)}});
  ParameterFunction c = ParameterFunction::equal(R, frac(1));
  CHECK(cache_file_name(R, a) == cache_file_name(R, b));
  CHECK(cache_file_name(R, a) != cache_file_name(R, c));
  CHECK(cache_file_name(R, a).rfind("B2-2-", 0) == 0);
  CHECK(cache_file_name(R, a).size() == std::string("B2-2-").size() + 16 + 5);
}
