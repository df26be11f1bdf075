#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "residua/linalg.hpp"

namespace residua {

struct Factor {
  char letter;  // 'A'..'G'
  int rank;
};

// A finite crystallographic root system in a fixed rational realization.
// Products of irreducible factors live in the direct sum of the factor
// ambients; V denotes span(roots), which may be smaller than the ambient
// (type A and G2 realizations have a fixed-vector complement).
class RootSystem {
public:
  // Labels: "A1".."A8", "B2".."B8", "C2".."C8", "D4".."D8", "E6".."E8",
  // "F4", "G2", and 'x'-separated products such as "A2xA1". Case-insensitive.
  static RootSystem build(const std::string& label);

  std::string label;
  std::vector<Factor> factors;
  std::size_t ambient_dim = 0;
  std::size_t span_dim = 0;  // total rank

  QMat roots;                // every root, sorted lexicographically
  QMat simple_roots;         // standard simple system, per factor
  std::vector<std::size_t> simple_factor;  // factor index of each simple root
  std::vector<int> root_class;             // length class id of each root
  std::vector<bool> root_positive;
  std::vector<std::size_t> negation;       // index of -roots[i]
  std::vector<std::string> class_names;    // canonical order, see below

  QMat span_complement_eqs;  // RREF rows n with <n,v> = 0 cutting out V
  mpz_class weyl_order;

  std::size_t num_roots() const { return roots.size(); }
  std::size_t num_classes() const { return class_names.size(); }
  std::size_t total_rank() const { return span_dim; }

  bool in_span(const QVec& v) const;
  bool is_dominant(const QVec& v) const;

  QVec apply_simple(std::size_t i, const QVec& v) const;

  // Unique dominant point of the orbit of v, with a word of simple-reflection
  // indices: applying apply_simple(word[0]), then word[1], ... to v yields it.
  std::pair<QVec, std::vector<std::size_t>> dominant_representative(const QVec& v) const;

  bool same_orbit(const QVec& v, const QVec& w) const;

  // Orbit cardinality by closure under simple reflections; throws
  // ResourceError past cap.
  unsigned long long orbit_size(const QVec& v, std::size_t cap = 10000000) const;
};

// Reflection in the hyperplane orthogonal to alpha.
QVec reflect(const QVec& alpha, const QVec& v);

struct Subsystem {
  std::vector<std::size_t> root_indices;  // into parent.roots
  QMat simples;                           // a simple system for the subsystem
  std::string type_label;                 // canonical label, "0" when empty
};

// Roots of R constant on every direction vector (the pointwise stabilizer
// subsystem of a subspace).
Subsystem parabolic_subsystem(const RootSystem& R, const QMat& direction);

// Canonical type label of a simple system (components sorted by rank
// descending, then letter). Empty input gives "0".
std::string classify_simple_system(const QMat& simples);

// One rational value per length class. Classes of a single irreducible
// system are named "all" (one class) or "long"/"short"; in a product each
// factor contributes "f<i>" or "f<i>.long"/"f<i>.short".
class ParameterFunction {
public:
  static ParameterFunction equal(const RootSystem& R, const Rat& value);
  // Keys must cover every class exactly; the single key "all" assigns one
  // value to all classes of any system.
  static ParameterFunction from_named(const RootSystem& R,
                                      const std::map<std::string, Rat>& named);

  std::vector<Rat> by_class;

  const Rat& of_root(const RootSystem& R, std::size_t root_idx) const {
    return by_class[R.root_class[root_idx]];
  }
  bool is_equal_parameter() const;
  // "name=p/q,name=p/q" in canonical class order; cache keys and reports.
  std::string canonical_string(const RootSystem& R) const;
};

}  // namespace residua
