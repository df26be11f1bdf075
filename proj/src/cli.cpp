#include "residua/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "residua/errors.hpp"
#include "residua/serialize.hpp"

namespace residua {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitResource = 2;
constexpr int kExitVerification = 3;

ParameterFunction parse_params(const RootSystem& R, const std::string& text) {
  std::map<std::string, Rat> named;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("parameter entry '" + item + "' is not of the form class=p/q");
    std::string name = item.substr(0, eq);
    if (named.count(name)) throw ConfigError("parameter class '" + name + "' given twice");
    named[name] = parse_rat(item.substr(eq + 1));
  }
  if (named.empty()) throw ConfigError("empty parameter list");
  return ParameterFunction::from_named(R, named);
}

// Rational "p/q" or plain integer, plus decimal and scientific forms for
// the numeric spectral parameter ("0.5", "2.5e-1"); decimals convert
// exactly via powers of ten.
Rat parse_ratio_or_decimal(const std::string& text) {
  if (text.find('/') != std::string::npos) return parse_rat(text);
  std::string mantissa = text;
  long exp10 = 0;
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    try {
      exp10 = std::stol(text.substr(epos + 1));
    } catch (const std::exception&) {
      throw ConfigError("bad numeric literal '" + text + "'");
    }
    mantissa = text.substr(0, epos);
  }
  auto dot = mantissa.find('.');
  std::string digits = mantissa;
  long frac_digits = 0;
  if (dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    frac_digits = static_cast<long>(mantissa.size() - dot - 1);
  }
  if (digits.empty() || digits == "-" || digits == "+")
    throw ConfigError("bad numeric literal '" + text + "'");
  Rat value = parse_rat(digits);
  long shift = exp10 - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(shift)));
  if (shift >= 0) value *= Rat(pow10);
  else value /= Rat(pow10);
  return value;
}

std::vector<Rat> parse_ratio_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  if (out.empty()) throw ConfigError("empty ratio list");
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
  out << content;
  if (!out) throw ConfigError("failed writing output file '" + out_path + "'");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in) throw ConfigError("failed reading '" + path + "'");
  return buf.str();
}

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

struct CommonOpts {
  std::string type;
  std::string params = "all=1";
  std::string format = "text";
  std::string out;
  unsigned threads = 1;
  std::size_t max_flats = EnumLimits{}.max_flats;
  std::size_t max_scanned = EnumLimits{}.max_scanned;

  EnumLimits limits() const { return {max_flats, max_scanned, threads}; }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_params = true) {
  cmd->add_option("--type", o.type, "root system label, e.g. B2 or A2xA1")->required();
  if (with_params)
    cmd->add_option("--params", o.params,
                    "parameter per length class, e.g. all=1 or long=1,short=2");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out, "write the artifact to this file instead of stdout");
  cmd->add_option("--threads", o.threads, "worker thread cap")->check(CLI::PositiveNumber);
  cmd->add_option("--max-flats", o.max_flats, "accepted-flat cap");
  cmd->add_option("--max-scanned", o.max_scanned, "candidate-cut cap");
}

int cmd_enumerate(const CommonOpts& o, const std::string& cache_dir_flag) {
  RootSystem R = RootSystem::build(o.type);
  ParameterFunction k = parse_params(R, o.params);
  std::string cache_dir = cache_dir_flag.empty() ? env_or("RESIDUA_CACHE_DIR", "") : cache_dir_flag;

  std::string cache_path;
  if (!cache_dir.empty()) {
    cache_path = (std::filesystem::path(cache_dir) / cache_file_name(R, k)).string();
    if (std::filesystem::exists(cache_path)) {
      std::string cached = slurp(cache_path);
      if (o.format == "json") emit(cached, o.out);
      else {
        OrbitTable table = table_from_json(cached);
        emit(o.format == "csv" ? table_csv(R, table) : table_text(R, table), o.out);
      }
      return kExitOk;
    }
  }

  OrbitTable table = enumerate_residual(R, k, o.limits());
  std::string json = table_json(R, table);
  if (!cache_path.empty()) {
    std::filesystem::create_directories(cache_dir);
    std::ofstream out(cache_path, std::ios::binary);
    if (!out || !(out << json)) throw ConfigError("cannot write cache file '" + cache_path + "'");
  }
  if (o.format == "json") emit(json, o.out);
  else emit(o.format == "csv" ? table_csv(R, table) : table_text(R, table), o.out);
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::string& checks, std::size_t codim_cap,
               std::size_t oracle_cap) {
  if (o.format == "csv") throw ConfigError("verify emits json or text");
  RootSystem R = RootSystem::build(o.type);
  ParameterFunction k = parse_params(R, o.params);
  OrbitTable table = enumerate_residual(R, k, o.limits());
  VerifyOptions vo;
  if (!checks.empty()) vo.only = split_commas(checks);
  vo.lattice_codim_cap = codim_cap;
  vo.oracle_cap = oracle_cap;
  VerificationReport report = verify_all(R, k, table, vo);
  emit(o.format == "json" ? report_json(R, k, report) : report_text(R, k, report), o.out);
  return report.all_passed() ? kExitOk : kExitVerification;
}

int cmd_scan(const CommonOpts& o, const std::string& ratios) {
  RootSystem R = RootSystem::build(o.type);
  ScanReport report = scan_parameters(R, parse_ratio_list(ratios), o.limits());
  if (o.format == "json") emit(scan_json(R, report), o.out);
  else if (o.format == "csv") emit(scan_csv(R, report), o.out);
  else emit(scan_text(R, report), o.out);
  return kExitOk;
}

int cmd_dynkin(const CommonOpts& o, const std::string& fixtures_flag, const std::string& dot_path) {
  if (o.format == "csv") throw ConfigError("dynkin emits json or text");
  std::string fixtures_path =
      fixtures_flag.empty() ? env_or("RESIDUA_FIXTURES", RESIDUA_DEFAULT_FIXTURES) : fixtures_flag;
  RootSystem R = RootSystem::build(o.type);
  ParameterFunction k = parse_params(R, o.params);
  OrbitTable table = enumerate_residual(R, k, o.limits());
  auto fixtures = load_bala_carter_fixtures(fixtures_path);
  BalaCarterCounts counts = bala_carter_counts(R, k, table, fixtures);
  std::vector<WeightedDiagram> diagrams;
  for (const ResidualOrbit& orbit : table.point_orbits())
    diagrams.push_back(weighted_diagram(R, k, orbit.rep.flat.center));
  if (!dot_path.empty()) {
    std::string dot;
    for (const WeightedDiagram& d : diagrams) dot += diagram_dot(R, d) + "\n";
    emit(dot, dot_path);
  }
  emit(o.format == "json" ? dynkin_json(R, table, diagrams, counts)
                          : dynkin_text(R, table, diagrams, counts),
       o.out);
  return counts.match ? kExitOk : kExitVerification;
}

int cmd_plancherel(const std::string& q_text, std::size_t samples, const std::string& format,
                   const std::string& out, const std::string& density_path, bool cross_check) {
  Rat q = parse_ratio_or_decimal(q_text);
  RankOneSpectrum s = decompose(q, samples);
  if (!density_path.empty()) emit(density_csv(s), density_path);

  bool support_ok = true;
  if (cross_check) {
    RootSystem R = RootSystem::build("A1");
    int side = rat_sgn(Rat(q - 1));
    ParameterFunction k = ParameterFunction::equal(R, frac(side));
    support_ok = cross_check_support(q, enumerate_residual(R, k));
  }

  if (format == "json") emit(spectrum_json(s), out);
  else if (format == "csv") emit(density_csv(s), out);
  else {
    std::string text = spectrum_text(s);
    if (cross_check)
      text += std::string("support cross-check: ") + (support_ok ? "pass" : "FAIL") + "\n";
    emit(text, out);
  }
  return support_ok ? kExitOk : kExitVerification;
}

int cmd_diff_oracle(const CommonOpts& o, std::size_t max_codim, std::size_t oracle_cap,
                    std::size_t rank_bound) {
  if (o.format == "csv") throw ConfigError("diff-oracle emits json or text");
  RootSystem R = RootSystem::build(o.type);
  ParameterFunction k = parse_params(R, o.params);
  OrbitTable table = enumerate_residual(R, k, o.limits());
  std::vector<AffineFlat> mine;
  for (const ResidualCoset& c : table.cosets) mine.push_back(c.flat);
  OracleResult oracle = brute_force_flats(R, k, max_codim, oracle_cap, rank_bound);
  FlatSetDiff diff = diff_flat_sets(mine, oracle.flats);
  emit(o.format == "json" ? diff_json(R, k, diff, mine.size(), oracle.flats.size())
                          : diff_text(R, k, diff, mine.size(), oracle.flats.size()),
       o.out);
  return diff.equal() ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "residua: residual cosets of shifted root-hyperplane arrangements.\n"
      "Exact enumeration, verification checks, parameter scans, weighted\n"
      "diagrams, and the rank-1 spectral decomposition."};
  app.require_subcommand(1);

  CommonOpts eo, vo, so, do_, fo;
  std::string cache_dir, checks, ratios, fixtures, dot_path;
  std::size_t codim_cap = VerifyOptions{}.lattice_codim_cap;
  std::size_t oracle_cap = VerifyOptions{}.oracle_cap;
  std::size_t diff_codim = static_cast<std::size_t>(-1);
  std::size_t rank_bound = 4;
  std::string q_text, spectrum_format = "text", spectrum_out, density_path;
  std::size_t samples = 1024;
  bool cross_check = false;

  CLI::App* enumerate = app.add_subcommand("enumerate", "compute the residual orbit table");
  add_common(enumerate, eo);
  enumerate->add_option("--cache-dir", cache_dir,
                        "result cache directory (env RESIDUA_CACHE_DIR)");

  CLI::App* verify = app.add_subcommand("verify", "run structural checks on the table");
  add_common(verify, vo);
  verify->add_option("--checks", checks, "comma list of check ids or aliases (default: all)");
  verify->add_option("--lattice-codim-cap", codim_cap,
                     "codim cap for the exhaustive lattice check");
  verify->add_option("--oracle-cap", oracle_cap, "flat cap for the lattice check");

  CLI::App* scan = app.add_subcommand("scan", "enumerate across a ratio grid");
  add_common(scan, so, /*with_params=*/false);
  scan->add_option("--ratios", ratios, "comma list of rationals, e.g. 1/4,1/2,1,2,4")
      ->required();

  CLI::App* dynkin = app.add_subcommand("dynkin", "weighted diagrams and orbit count comparison");
  add_common(dynkin, do_);
  do_.params = "all=2";
  dynkin->add_option("--fixtures", fixtures,
                     "orbit count fixture JSON (env RESIDUA_FIXTURES, else built-in path)");
  dynkin->add_option("--dot", dot_path, "also write the diagrams as DOT to this file");

  CLI::App* plancherel =
      app.add_subcommand("plancherel", "rank-1 spectral decomposition for a parameter q");
  plancherel->add_option("--q", q_text, "spectral parameter, rational or decimal")->required();
  plancherel->add_option("--samples", samples, "density samples on the circle")
      ->check(CLI::PositiveNumber);
  plancherel->add_option("--format", spectrum_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  plancherel->add_option("--out", spectrum_out, "write the artifact to this file");
  plancherel->add_option("--density-csv", density_path, "also write the density as CSV here");
  plancherel->add_flag("--cross-check", cross_check,
                       "verify the support against the rank-1 orbit table");

  CLI::App* diff = app.add_subcommand("diff-oracle",
                                      "compare the enumerator against the brute-force oracle");
  add_common(diff, fo);
  diff->add_option("--max-codim", diff_codim, "oracle lattice depth cap");
  diff->add_option("--oracle-cap", oracle_cap, "oracle flat cap");
  diff->add_option("--rank-bound", rank_bound, "largest rank the oracle accepts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(eo, cache_dir);
    if (verify->parsed()) return cmd_verify(vo, checks, codim_cap, oracle_cap);
    if (scan->parsed()) return cmd_scan(so, ratios);
    if (dynkin->parsed()) return cmd_dynkin(do_, fixtures, dot_path);
    if (plancherel->parsed())
      return cmd_plancherel(q_text, samples, spectrum_format, spectrum_out, density_path,
                            cross_check);
    if (diff->parsed()) return cmd_diff_oracle(fo, diff_codim, oracle_cap, rank_bound);
    return kExitConfig;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n" << e.partial << "\n";
    return kExitResource;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace residua
