#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "residua/arrangement.hpp"

namespace residua {

// One flat of the table. parent/cut_root record how the breadth-first
// descent reached it: flat = parent's flat cut with {root(v) = k_root}.
// The full space is its own ancestor (parent = npos).
struct ResidualCoset {
  AffineFlat flat;
  IndexReport report;
  std::size_t parent = static_cast<std::size_t>(-1);
  std::size_t cut_root = static_cast<std::size_t>(-1);

  std::size_t dim() const { return flat.dim(); }
  // Additive tempered tag: the (center, direction) pair of the flat.
  std::pair<QVec, QMat> tempered_tag() const { return {flat.center, flat.direction}; }
};

struct ResidualOrbit {
  std::size_t rep_index = 0;            // into OrbitTable::cosets
  ResidualCoset rep;                    // dominant-centered, lex-least member
  std::vector<std::size_t> members;     // all cosets of the orbit
  unsigned long long orbit_size = 0;    // == members.size()
  std::string parabolic_type;           // type of the roots constant on rep
  std::vector<std::size_t> witness_chain_dims;  // dims along rep's chain
};

struct OrbitTable {
  std::string type;
  std::size_t rank = 0;  // total rank of the system
  ParameterFunction params;
  std::vector<ResidualCoset> cosets;  // every residual flat, discovery order
  std::vector<ResidualOrbit> orbits;  // sorted by dim desc, then canonically
  std::size_t scanned = 0;            // candidate cuts evaluated

  // Chain of flats from the full space down to cosets[i], codims 0..codim.
  std::vector<AffineFlat> witness_chain(std::size_t i) const;
  std::vector<std::size_t> witness_chain_dims(std::size_t i) const;

  std::vector<ResidualOrbit> point_orbits() const;
  std::map<std::size_t, std::size_t> orbit_counts_by_dim() const;
  std::map<std::size_t, std::size_t> flat_counts_by_dim() const;
};

struct EnumLimits {
  std::size_t max_flats = 1000000;     // accepted flats before ResourceError
  std::size_t max_scanned = 32000000;  // evaluated candidate cuts
  unsigned threads = 1;
};

// Breadth-first descent from the full space: cut each flat of the frontier
// with every shifted hyperplane {alpha(v) = k_alpha} not containing it, keep
// the cuts whose order stays >= 0, dedup by canonical form across branches.
// The result is independent of thread count and root order. Throws
// ResourceError past the limits, with a frontier summary in .partial.
OrbitTable enumerate_residual(const RootSystem& R, const ParameterFunction& k,
                              const EnumLimits& limits = {});

// The dim-0 rows of the table.
std::vector<ResidualOrbit> residual_points(const OrbitTable& table);

struct CheckResult {
  std::string id;     // descriptive name
  std::string alias;  // short code accepted wherever ids are
  bool passed = false;
  std::string details;
  std::vector<std::string> counterexamples;  // canonical keys or points
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  // Ids or aliases to run; empty means every check.
  std::vector<std::string> only;
  // Codim cap for the exhaustive lattice walk; npos picks the full rank
  // when rank <= 4 and 2 otherwise.
  std::size_t lattice_codim_cap = static_cast<std::size_t>(-1);
  std::size_t oracle_cap = 2000000;
};

// The six checks, in order:
//   lattice-order-bound    (T1a)  every lattice flat has order <= 0
//   points-finite-closed   (T1b)  point set finite and reflection-closed
//   point-negation         (T2)   every residual point v has -v in its orbit
//   center-order-negative  (T3)   centers of positive-dim flats have order < 0
//   order-exactly-zero     (T5B)  every table flat has order exactly 0
//   points-on-lines        (L4.1) every residual point lies on a residual line
// Failures are reported with counterexamples, never repaired.
VerificationReport verify_all(const RootSystem& R, const ParameterFunction& k,
                              const OrbitTable& table, const VerifyOptions& opts = {});

// (parabolic root set, center) pair of one orbit representative.
struct PairRep {
  std::vector<std::size_t> parabolic_roots;  // sorted indices into R.roots
  std::string parabolic_type;
  QVec center;
};

// One pair per orbit, in table orbit order. Verifies over every coset that
// flat -> (roots constant on flat, center) is injective and that the pair
// reconstructs the flat; throws DomainError otherwise.
std::vector<PairRep> pair_representation(const RootSystem& R, const OrbitTable& table);

struct ScanPoint {
  Rat ratio;
  ParameterFunction params;
  std::map<std::size_t, std::size_t> orbit_counts;  // by dim
  std::map<std::size_t, std::size_t> flat_counts;   // by dim
  std::size_t total_orbits = 0;
  std::size_t point_orbits = 0;
};

struct ScanReport {
  std::string type;
  bool single_class = false;
  std::vector<ScanPoint> points;  // ratios strictly increasing
  // Interior grid ratios whose per-dim orbit counts differ from both
  // neighbors. Endpoints are never walls under this rule.
  std::vector<Rat> walls;
  // Maximal index ranges [first, last] of equal per-dim orbit counts.
  std::vector<std::pair<std::size_t, std::size_t>> segments;
};

// For a long/short pair of classes, enumerate at k_long = 1, k_short =
// ratio for each grid ratio; a single-class system is scanned at k = ratio.
// Other class structures are rejected with ConfigError.
ScanReport scan_parameters(const RootSystem& R, const std::vector<Rat>& ratios,
                           const EnumLimits& limits = {});

}  // namespace residua
