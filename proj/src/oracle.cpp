#include "residua/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_set>

#include "residua/errors.hpp"

namespace residua {

namespace {

struct QVecHash {
  std::size_t operator()(const QVec& v) const { return hash_qvec(v); }
};
struct QVecEq {
  bool operator()(const QVec& a, const QVec& b) const { return cmp_qvec(a, b) == 0; }
};

void sort_flats(std::vector<AffineFlat>& flats) {
  std::sort(flats.begin(), flats.end(), [](const AffineFlat& a, const AffineFlat& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return a.cmp(b) < 0;
  });
}

}  // namespace

OracleResult brute_force_flats(const RootSystem& R, const ParameterFunction& k,
                               std::size_t max_codim, std::size_t cap, std::size_t rank_bound,
                               const std::vector<std::size_t>& probe_order) {
  if (R.span_dim > rank_bound)
    throw ConfigError("oracle lattice scan limited to rank <= " + std::to_string(rank_bound) +
                      "; " + R.label + " has rank " + std::to_string(R.span_dim) +
                      " (raise the bound to force it)");
  if (max_codim > R.span_dim) max_codim = R.span_dim;

  std::vector<std::size_t> order(R.num_roots());
  std::iota(order.begin(), order.end(), 0);
  if (!probe_order.empty()) {
    if (probe_order.size() != R.num_roots())
      throw ConfigError("probe_order must permute all hyperplanes");
    order = probe_order;
  }

  OracleResult out;
  out.max_codim = max_codim;
  auto consider = [&](const AffineFlat& f) {
    IndexReport rep = order_flat(R, k, f);
    if (rep.order >= 0) out.flats.push_back(f);
    if (rep.order > 0) out.violations.emplace_back(f, rep);
  };

  AffineFlat V = span_flat(R);
  std::unordered_set<std::string> seen{V.key()};
  consider(V);
  std::vector<AffineFlat> frontier{V};
  for (std::size_t c = 0; c < max_codim && !frontier.empty(); ++c) {
    std::vector<AffineFlat> next;
    for (const AffineFlat& M : frontier) {
      for (std::size_t a : order) {
        const QVec& alpha = R.roots[a];
        if (M.is_constant(alpha)) continue;
        auto [res, L] = intersect(M, alpha, k.of_root(R, a));
        assert(res == CutResult::Proper);  // non-constant affine functions hit every value
        (void)res;
        if (!seen.insert(L.key()).second) continue;
        if (seen.size() > cap)
          throw ResourceError(
              "oracle lattice exceeds cap of " + std::to_string(cap) + " flats",
              "scanned=" + std::to_string(seen.size()) + " codim=" + std::to_string(c + 1));
        consider(L);
        if (c + 1 < max_codim) next.push_back(std::move(L));
      }
    }
    frontier = std::move(next);
  }
  out.lattice_size = seen.size();
  sort_flats(out.flats);
  return out;
}

std::vector<QVec> brute_force_points(const RootSystem& R, const ParameterFunction& k,
                                     std::size_t rank_bound) {
  if (R.span_dim > rank_bound)
    throw ConfigError("oracle point search limited to rank <= " + std::to_string(rank_bound) +
                      "; " + R.label + " has rank " + std::to_string(R.span_dim) +
                      " (raise the bound to force it)");
  std::size_t n = R.span_dim;
  std::size_t m = R.num_roots();

  QMat base;
  for (const QVec& c : R.span_complement_eqs) {
    QVec row = c;
    row.push_back(Rat(0));
    base.push_back(std::move(row));
  }

  std::unordered_set<QVec, QVecHash, QVecEq> found;
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    QMat eqs = base;
    for (std::size_t i : pick) {
      QVec row = R.roots[i];
      row.push_back(k.of_root(R, i));
      eqs.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots = rref(eqs);
    bool consistent = true;
    for (std::size_t p : pivots)
      if (p == R.ambient_dim) consistent = false;
    if (consistent && pivots.size() == R.ambient_dim) {
      QVec x(R.ambient_dim);
      for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = eqs[i][R.ambient_dim];
      if (order_point(R, k, x).order == 0) found.insert(std::move(x));
    }
    // next combination of size n from {0..m-1}
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::vector<QVec> points(found.begin(), found.end());
  std::sort(points.begin(), points.end(),
            [](const QVec& a, const QVec& b) { return cmp_qvec(a, b) < 0; });
  return points;
}

FlatSetDiff diff_flat_sets(std::vector<AffineFlat> a, std::vector<AffineFlat> b) {
  auto by_form = [](const AffineFlat& x, const AffineFlat& y) { return x.cmp(y) < 0; };
  std::sort(a.begin(), a.end(), by_form);
  std::sort(b.begin(), b.end(), by_form);
  FlatSetDiff d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d.only_a),
                      by_form);
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(d.only_b),
                      by_form);
  return d;
}

}  // namespace residua
