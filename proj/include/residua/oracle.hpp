#pragma once

#include <vector>

#include "residua/arrangement.hpp"

namespace residua {

// Brute-force reference results. This header deliberately shares nothing
// with the enumerator in residual.hpp beyond rootsys/arrangement: the point
// of the exercise is an independent route to the same answer.

struct OracleResult {
  // Every distinct flat of the intersection lattice with order >= 0, sorted
  // by dimension descending, then canonical form.
  std::vector<AffineFlat> flats;
  // Flats with order strictly positive. The expected value is "none"; any
  // entry is a reportable counterexample, not an exception.
  std::vector<std::pair<AffineFlat, IndexReport>> violations;
  std::size_t lattice_size = 0;  // distinct flats scanned, V included
  std::size_t max_codim = 0;
};

// Exhaustive scan of the intersection lattice of the shifted hyperplanes
// {<alpha, v> = k_alpha}, one per root, inside V. Works level by level:
// every codim-(c+1) lattice flat is a proper cut of a codim-c one by a
// single hyperplane, so refining each frontier flat by every hyperplane
// with global canonical-form dedup visits each distinct intersection of
// every hyperplane subset exactly once. Order is evaluated on all of them.
//
// probe_order optionally permutes the hyperplane probing order (the result
// must not depend on it; tests exercise this).
OracleResult brute_force_flats(const RootSystem& R, const ParameterFunction& k,
                               std::size_t max_codim = static_cast<std::size_t>(-1),
                               std::size_t cap = 2000000, std::size_t rank_bound = 4,
                               const std::vector<std::size_t>& probe_order = {});

// Independent point route: solve every size-n subset of the shifted
// hyperplanes (n = rank) whose normals are invertible inside V, evaluate the
// order at each solution, keep the zeros. Complete for point enumeration:
// a point with hits - zeros = n lies on at least n hit hyperplanes with
// independent normals, else those hyperplanes would cut a positive-dim flat
// of order > 0.
std::vector<QVec> brute_force_points(const RootSystem& R, const ParameterFunction& k,
                                     std::size_t rank_bound = 4);

struct FlatSetDiff {
  std::vector<AffineFlat> only_a;
  std::vector<AffineFlat> only_b;
  bool equal() const { return only_a.empty() && only_b.empty(); }
};

// Symmetric difference of two flat collections as canonical-form sets.
FlatSetDiff diff_flat_sets(std::vector<AffineFlat> a, std::vector<AffineFlat> b);

}  // namespace residua
