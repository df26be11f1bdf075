#pragma once

#include <string>
#include <utility>
#include <vector>

#include "residua/rootsys.hpp"

namespace residua {

// Nonempty affine subspace of Q^ambient held in canonical form: the unique
// RREF of its equation system, rows [normal | value] meaning <normal, v> =
// value, ordered by pivot column. Two flats are equal as sets iff their
// canonical forms are identical, so equality, hashing and ordering are
// structural.
class AffineFlat {
public:
  AffineFlat() = default;

  static AffineFlat full_space(std::size_t ambient);
  // Rows are ambient+1 wide. Throws DomainError on an inconsistent system.
  static AffineFlat from_equations(std::size_t ambient, QMat equations);
  static AffineFlat from_point_direction(const QVec& point, const QMat& direction);
  static AffineFlat point_flat(const QVec& p);

  std::size_t ambient = 0;
  QMat eqs;
  QMat direction;  // canonical kernel basis of the normals
  QVec offset;     // pivot-entry particular solution
  QVec center;     // orthogonal projection of 0 onto the flat

  std::size_t dim() const { return ambient - eqs.size(); }

  bool contains(const QVec& p) const;
  // True iff <normal, .> is constant on the flat.
  bool is_constant(const QVec& normal) const;
  // The constant value; meaningful only when is_constant holds.
  Rat value_of(const QVec& normal) const { return dot(normal, offset); }

  // Compact canonical serialization; equal iff the flats are equal.
  std::string key() const;
  std::size_t hash() const;
  int cmp(const AffineFlat& other) const;
  bool operator==(const AffineFlat& other) const { return cmp(other) == 0; }
};

enum class CutResult { Proper, Contains, Empty };

// L intersected with the hyperplane {<normal, v> = value}. Contains means
// the hyperplane already contains L; Empty means they are disjoint. The
// returned flat is meaningful only for Proper, where its codim is L's + 1.
std::pair<CutResult, AffineFlat> intersect(const AffineFlat& L, const QVec& normal,
                                           const Rat& value);

struct IndexReport {
  long hits = 0;   // roots constant on the flat with value k_alpha
  long zeros = 0;  // roots constant with value 0
  long index = 0;  // hits - zeros
  long codim = 0;  // within span(roots)
  long order = 0;  // index - codim
  std::vector<std::size_t> hit_roots;
  std::vector<std::size_t> zero_roots;
};

// Order of a point of V = span(roots): hits minus zeros over all roots,
// minus dim V. Throws DomainError if v is outside V.
IndexReport order_point(const RootSystem& R, const ParameterFunction& k, const QVec& v);

// Order of a flat L contained in V: index (hits minus zeros over the roots
// constant on L) minus codim. Cross-checks the evaluation at L's center
// against the evaluation at its particular solution.
IndexReport order_flat(const RootSystem& R, const ParameterFunction& k, const AffineFlat& L);

// V = span(roots) as a flat of the ambient space.
AffineFlat span_flat(const RootSystem& R);

}  // namespace residua
