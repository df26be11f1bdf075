#pragma once

#include <map>
#include <string>
#include <vector>

#include "residua/residual.hpp"

namespace residua {

// Simple-root labels of a dominant center. labels[i] is the pairing of
// simple root i with the dominant representative; normalized_labels
// rescales the input to the k = 2 convention (labels land in {0, 2} for
// the points matching distinguished orbits). The two coincide at k = 2
// and for the zero center.
struct WeightedDiagram {
  QVec dominant_center;
  std::vector<Rat> labels;
  std::vector<Rat> normalized_labels;

  bool labels_nonnegative() const;
  bool normalized_labels_in_02() const;
};

// Requires an equal parameter function; any center of its orbit gives the
// same diagram (the dominant representative is taken first).
WeightedDiagram weighted_diagram(const RootSystem& R, const ParameterFunction& k,
                                 const QVec& center);

// DOT rendering of the diagram: one node per simple root labeled with its
// value, edges weighted by the bond multiplicity of the pair.
std::string diagram_dot(const RootSystem& R, const WeightedDiagram& d);

struct BalaCarterFixture {
  long distinguished = 0;
  long nilpotent = 0;
  std::string source;
};

// JSON file {type: {distinguished, nilpotent, source}}. ConfigError on a
// missing or malformed file.
std::map<std::string, BalaCarterFixture> load_bala_carter_fixtures(const std::string& path);

// A residual-point diagram whose normalized labels leave {0, 2}; reported,
// never fatal.
struct DiagramFinding {
  QVec center;
  std::vector<Rat> normalized_labels;
};

struct BalaCarterCounts {
  std::string type;
  long distinguished_expected = 0;
  long nilpotent_expected = 0;
  std::size_t distinguished_found = 0;   // point orbits of the table
  std::size_t total_orbits_found = 0;    // orbits of every dimension
  bool match = false;
  std::vector<DiagramFinding> findings;
};

// Compares the table's orbit counts against the fixture expectations.
// Product types multiply their factors' fixture entries. ConfigError when
// a factor has no fixture entry; DomainError for non-equal parameters.
BalaCarterCounts bala_carter_counts(const RootSystem& R, const ParameterFunction& k,
                                    const OrbitTable& table,
                                    const std::map<std::string, BalaCarterFixture>& fixtures);

}  // namespace residua
