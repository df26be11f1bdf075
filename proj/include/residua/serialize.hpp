#pragma once

#include <string>
#include <vector>

#include "residua/dynkin.hpp"
#include "residua/oracle.hpp"
#include "residua/plancherel.hpp"
#include "residua/residual.hpp"

namespace residua {

inline constexpr int kSchemaVersion = 1;

// Every renderer below is a pure function of its arguments: equal inputs
// give byte-identical strings (insertion-ordered JSON keys, fixed float
// formatting), independent of thread count, locale, or run.

// {schema_version, type, rank, params: {class: "p/q"}, orbits: [{dim, i, o,
//  center, direction_basis, orbit_size, parabolic_type,
//  witness_chain_dims}]}
std::string table_json(const RootSystem& R, const OrbitTable& table);
std::string table_csv(const RootSystem& R, const OrbitTable& table);
std::string table_text(const RootSystem& R, const OrbitTable& table);

// Inverse of table_json on its schema fields, for re-rendering cached
// results without recomputation. The returned table has one coset per
// orbit (the representative); discovery-order data and scan counters are
// not part of the schema and come back empty. Throws ConfigError on
// malformed input.
OrbitTable table_from_json(const std::string& text);

std::string report_json(const RootSystem& R, const ParameterFunction& k,
                        const VerificationReport& report);
std::string report_text(const RootSystem& R, const ParameterFunction& k,
                        const VerificationReport& report);

std::string scan_json(const RootSystem& R, const ScanReport& report);
std::string scan_csv(const RootSystem& R, const ScanReport& report);
std::string scan_text(const RootSystem& R, const ScanReport& report);

// diagrams[j] belongs to table.point_orbits()[j].
std::string dynkin_json(const RootSystem& R, const OrbitTable& table,
                        const std::vector<WeightedDiagram>& diagrams,
                        const BalaCarterCounts& counts);
std::string dynkin_text(const RootSystem& R, const OrbitTable& table,
                        const std::vector<WeightedDiagram>& diagrams,
                        const BalaCarterCounts& counts);

// {schema_version, q, point_masses: [{t: "q^-1", mass}], continuous_total,
//  density: [[angle, value]...], total}
std::string spectrum_json(const RankOneSpectrum& s);
std::string spectrum_text(const RankOneSpectrum& s);
std::string density_csv(const RankOneSpectrum& s);

// a = recursive enumerator, b = brute-force oracle.
std::string diff_json(const RootSystem& R, const ParameterFunction& k,
                      const FlatSetDiff& diff, std::size_t a_count, std::size_t b_count);
std::string diff_text(const RootSystem& R, const ParameterFunction& k,
                      const FlatSetDiff& diff, std::size_t a_count, std::size_t b_count);

// "<type>-<rank>-<hash>.json" where the hash is a stable digest of the
// canonical parameter string; equal (type, rank, params) triples collide
// exactly.
std::string cache_file_name(const RootSystem& R, const ParameterFunction& k);

}  // namespace residua
