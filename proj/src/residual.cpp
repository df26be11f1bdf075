#include "residua/residual.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "residua/errors.hpp"
#include "residua/oracle.hpp"
#include "residua/parallel.hpp"

namespace residua {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::string qmat_str(const QMat& m) {
  std::string s;
  for (const QVec& row : m) {
    for (const Rat& x : row) {
      s += rat_str(x);
      s += ',';
    }
    s += ';';
  }
  return s;
}

QVec apply_word(const RootSystem& R, const std::vector<std::size_t>& word, QVec v) {
  for (std::size_t s : word) v = R.apply_simple(s, v);
  return v;
}

// Canonical form of the direction subspace after moving the center to its
// dominant position, minimized over the stabilizer of that position. The
// stabilizer is generated by the simple reflections fixing the point, so a
// closure walk over those generators reaches the whole subspace orbit.
QMat min_direction_at_dominant(const RootSystem& R, const QVec& dominant, QMat dir) {
  rref(dir);
  std::vector<std::size_t> fixing;
  for (std::size_t i = 0; i < R.simple_roots.size(); ++i)
    if (sgn(dot(R.simple_roots[i], dominant)) == 0) fixing.push_back(i);
  if (fixing.empty() || dir.empty()) return dir;

  std::set<std::string> seen;
  std::vector<QMat> queue{dir};
  seen.insert(qmat_str(dir));
  QMat best = dir;
  while (!queue.empty()) {
    QMat cur = std::move(queue.back());
    queue.pop_back();
    for (std::size_t s : fixing) {
      QMat img;
      img.reserve(cur.size());
      for (const QVec& row : cur) img.push_back(R.apply_simple(s, row));
      rref(img);
      if (seen.insert(qmat_str(img)).second) {
        if (cmp_qmat(img, best) < 0) best = img;
        queue.push_back(std::move(img));
      }
    }
  }
  return best;
}

struct GroupKey {
  std::string str;
  QVec dominant;
};

GroupKey group_key(const RootSystem& R, const AffineFlat& flat) {
  auto [dom, word] = R.dominant_representative(flat.center);
  QMat dir;
  dir.reserve(flat.direction.size());
  for (const QVec& row : flat.direction) dir.push_back(apply_word(R, word, row));
  QMat min_dir = min_direction_at_dominant(R, dom, std::move(dir));
  std::string s;
  for (const Rat& x : dom) {
    s += rat_str(x);
    s += ',';
  }
  s += '|';
  s += qmat_str(min_dir);
  return {std::move(s), std::move(dom)};
}

void build_orbits(const RootSystem& R, OrbitTable& table) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < table.cosets.size(); ++i)
    groups[group_key(R, table.cosets[i].flat).str].push_back(i);

  table.orbits.clear();
  table.orbits.reserve(groups.size());
  for (auto& [key, members] : groups) {
    ResidualOrbit orb;
    std::size_t best = kNone;
    for (std::size_t i : members) {
      const AffineFlat& f = table.cosets[i].flat;
      if (!R.is_dominant(f.center)) continue;
      if (best == kNone || f.cmp(table.cosets[best].flat) < 0) best = i;
    }
    // Every orbit of a reflection-closed table has a dominant-centered
    // member; fall back to the least member so a closure bug still yields
    // a table verify_all can indict.
    if (best == kNone) {
      best = members[0];
      for (std::size_t i : members)
        if (table.cosets[i].flat.cmp(table.cosets[best].flat) < 0) best = i;
    }
    orb.rep_index = best;
    orb.rep = table.cosets[best];
    orb.members = std::move(members);
    orb.orbit_size = orb.members.size();
    orb.parabolic_type = parabolic_subsystem(R, orb.rep.flat.direction).type_label;
    orb.witness_chain_dims = table.witness_chain_dims(best);
    table.orbits.push_back(std::move(orb));
  }
  std::sort(table.orbits.begin(), table.orbits.end(),
            [](const ResidualOrbit& a, const ResidualOrbit& b) {
              if (a.rep.dim() != b.rep.dim()) return a.rep.dim() > b.rep.dim();
              int c = cmp_qvec(a.rep.flat.center, b.rep.flat.center);
              if (c != 0) return c < 0;
              return a.rep.flat.cmp(b.rep.flat) < 0;
            });
}

std::string frontier_summary(const OrbitTable& table, const std::vector<std::size_t>& frontier,
                             std::size_t codim) {
  std::ostringstream os;
  os << "accepted=" << table.cosets.size() << " scanned=" << table.scanned
     << " codim=" << codim << " frontier=" << frontier.size();
  for (std::size_t j = 0; j < frontier.size() && j < 4; ++j)
    os << " " << table.cosets[frontier[j]].flat.key();
  return os.str();
}

}  // namespace

std::vector<AffineFlat> OrbitTable::witness_chain(std::size_t i) const {
  std::vector<AffineFlat> chain;
  for (std::size_t cur = i; cur != kNone; cur = cosets[cur].parent)
    chain.push_back(cosets[cur].flat);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<std::size_t> OrbitTable::witness_chain_dims(std::size_t i) const {
  std::vector<std::size_t> dims;
  for (std::size_t cur = i; cur != kNone; cur = cosets[cur].parent)
    dims.push_back(cosets[cur].flat.dim());
  std::reverse(dims.begin(), dims.end());
  return dims;
}

std::vector<ResidualOrbit> OrbitTable::point_orbits() const {
  std::vector<ResidualOrbit> pts;
  for (const ResidualOrbit& o : orbits)
    if (o.rep.dim() == 0) pts.push_back(o);
  return pts;
}

std::map<std::size_t, std::size_t> OrbitTable::orbit_counts_by_dim() const {
  std::map<std::size_t, std::size_t> c;
  for (const ResidualOrbit& o : orbits) ++c[o.rep.dim()];
  return c;
}

std::map<std::size_t, std::size_t> OrbitTable::flat_counts_by_dim() const {
  std::map<std::size_t, std::size_t> c;
  for (const ResidualCoset& f : cosets) ++c[f.dim()];
  return c;
}

OrbitTable enumerate_residual(const RootSystem& R, const ParameterFunction& k,
                              const EnumLimits& limits) {
  OrbitTable table;
  table.type = R.label;
  table.rank = R.span_dim;
  table.params = k;

  AffineFlat V = span_flat(R);
  table.cosets.push_back({V, order_flat(R, k, V), kNone, kNone});

  std::unordered_set<std::string> memo;
  memo.insert(V.key());

  const std::size_t nroots = R.num_roots();
  std::vector<std::size_t> frontier{0};
  std::size_t codim = 0;

  // One evaluated candidate cut. kind: 0 the hyperplane does not cut the
  // parent properly, 1 known flat (skipped scoring), 2 fresh flat.
  struct Eval {
    int kind = 0;
    std::string key;
    AffineFlat flat;
    IndexReport report;
  };

  while (!frontier.empty()) {
    ++codim;
    std::vector<std::size_t> next;
    const std::size_t total = frontier.size() * nroots;
    const std::size_t batch =
        std::max<std::size_t>(1024, std::size_t{256} * std::max(1u, limits.threads));
    for (std::size_t b0 = 0; b0 < total; b0 += batch) {
      const std::size_t b1 = std::min(total, b0 + batch);
      std::vector<Eval> evals(b1 - b0);
      // The memo is frozen during this phase; the merge below is its only
      // writer. Duplicate keys within one batch cost a redundant score and
      // are resolved at merge in candidate order.
      parallel_chunks(b1 - b0, limits.threads, [&](std::size_t i0, std::size_t i1) {
        for (std::size_t i = i0; i < i1; ++i) {
          const std::size_t c = b0 + i;
          const AffineFlat& parent = table.cosets[frontier[c / nroots]].flat;
          const std::size_t a = c % nroots;
          auto [cut, child] = intersect(parent, R.roots[a], k.of_root(R, a));
          if (cut != CutResult::Proper) continue;
          Eval& e = evals[i];
          e.key = child.key();
          if (memo.count(e.key)) {
            e.kind = 1;
            continue;
          }
          e.kind = 2;
          e.report = order_flat(R, k, child);
          e.flat = std::move(child);
        }
      });
      for (std::size_t i = 0; i < evals.size(); ++i) {
        Eval& e = evals[i];
        if (e.kind == 0) continue;
        ++table.scanned;
        if (table.scanned > limits.max_scanned)
          throw ResourceError("candidate cap exceeded while enumerating " + R.label,
                              frontier_summary(table, frontier, codim));
        if (!memo.insert(std::move(e.key)).second) continue;
        if (e.kind != 2) continue;
        if (e.report.order >= 0) {
          const std::size_t c = b0 + i;
          table.cosets.push_back({std::move(e.flat), e.report, frontier[c / nroots], c % nroots});
          next.push_back(table.cosets.size() - 1);
          if (table.cosets.size() > limits.max_flats)
            throw ResourceError("flat cap exceeded while enumerating " + R.label,
                                frontier_summary(table, frontier, codim));
        }
      }
    }
    frontier = std::move(next);
  }

  build_orbits(R, table);
  return table;
}

std::vector<ResidualOrbit> residual_points(const OrbitTable& table) {
  return table.point_orbits();
}

bool VerificationReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

bool check_selected(const VerifyOptions& opts, const std::string& id, const std::string& alias) {
  if (opts.only.empty()) return true;
  for (const std::string& want : opts.only)
    if (want == id || want == alias) return true;
  return false;
}

std::string point_str(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

}  // namespace

VerificationReport verify_all(const RootSystem& R, const ParameterFunction& k,
                              const OrbitTable& table, const VerifyOptions& opts) {
  VerificationReport report;

  std::vector<const ResidualCoset*> points;
  std::vector<const ResidualCoset*> lines;
  for (const ResidualCoset& c : table.cosets) {
    if (c.dim() == 0) points.push_back(&c);
    if (c.dim() == 1) lines.push_back(&c);
  }

  if (check_selected(opts, "lattice-order-bound", "T1a")) {
    CheckResult c{"lattice-order-bound", "T1a", true, "", {}};
    std::size_t cap = opts.lattice_codim_cap;
    if (cap == kNone) cap = R.span_dim <= 4 ? R.span_dim : 2;
    try {
      OracleResult lattice =
          brute_force_flats(R, k, cap, opts.oracle_cap, R.span_dim);
      for (const auto& [flat, rep] : lattice.violations) c.counterexamples.push_back(flat.key());
      c.passed = lattice.violations.empty();
      std::ostringstream os;
      os << "order <= 0 on " << lattice.lattice_size << " lattice flats up to codim " << cap;
      if (!c.passed) os << "; " << c.counterexamples.size() << " violations";
      c.details = os.str();
    } catch (const ResourceError& e) {
      c.passed = false;
      c.details = std::string("lattice walk exceeded its cap: ") + e.what();
    }
    report.checks.push_back(std::move(c));
  }

  if (check_selected(opts, "points-finite-closed", "T1b")) {
    CheckResult c{"points-finite-closed", "T1b", true, "", {}};
    std::unordered_set<std::string> keys;
    for (const ResidualCoset* p : points) keys.insert(p->flat.key());
    for (const ResidualCoset* p : points) {
      for (std::size_t s = 0; s < R.simple_roots.size(); ++s) {
        QVec img = R.apply_simple(s, p->flat.center);
        if (!keys.count(AffineFlat::point_flat(img).key())) {
          c.passed = false;
          c.counterexamples.push_back(point_str(p->flat.center) + " -> " + point_str(img));
        }
      }
    }
    std::ostringstream os;
    os << points.size() << " points, reflection images all present: " << (c.passed ? "yes" : "no");
    c.details = os.str();
    report.checks.push_back(std::move(c));
  }

  if (check_selected(opts, "point-negation", "T2")) {
    CheckResult c{"point-negation", "T2", true, "", {}};
    std::size_t checked = 0;
    for (const ResidualOrbit& o : table.orbits) {
      if (o.rep.dim() != 0) continue;
      ++checked;
      QVec neg = scale(frac(-1), o.rep.flat.center);
      if (!R.same_orbit(o.rep.flat.center, neg)) {
        c.passed = false;
        c.counterexamples.push_back(point_str(o.rep.flat.center));
      }
    }
    std::ostringstream os;
    os << "-v in the orbit of v for " << checked << " point orbits";
    c.details = os.str();
    report.checks.push_back(std::move(c));
  }

  if (check_selected(opts, "center-order-negative", "T3")) {
    CheckResult c{"center-order-negative", "T3", true, "", {}};
    // Equivariance makes the orbit representative decisive; small tables
    // are swept in full anyway.
    std::size_t checked = 0;
    auto probe = [&](const ResidualCoset& f) {
      if (f.dim() == 0) return;
      ++checked;
      if (order_point(R, k, f.flat.center).order >= 0) {
        c.passed = false;
        c.counterexamples.push_back(f.flat.key());
      }
    };
    if (table.cosets.size() <= 4096)
      for (const ResidualCoset& f : table.cosets) probe(f);
    else
      for (const ResidualOrbit& o : table.orbits) probe(o.rep);
    std::ostringstream os;
    os << "center order < 0 for " << checked << " positive-dim flats";
    c.details = os.str();
    report.checks.push_back(std::move(c));
  }

  if (check_selected(opts, "order-exactly-zero", "T5B")) {
    CheckResult c{"order-exactly-zero", "T5B", true, "", {}};
    for (const ResidualCoset& f : table.cosets) {
      IndexReport fresh = order_flat(R, k, f.flat);
      if (fresh.order != 0 || f.report.order != 0) {
        c.passed = false;
        c.counterexamples.push_back(f.flat.key());
      }
    }
    std::ostringstream os;
    os << "order recomputed as exactly 0 on " << table.cosets.size() << " flats";
    c.details = os.str();
    report.checks.push_back(std::move(c));
  }

  if (check_selected(opts, "points-on-lines", "L4.1")) {
    CheckResult c{"points-on-lines", "L4.1", true, "", {}};
    std::size_t checked = 0;
    auto on_some_line = [&](const QVec& p) {
      for (const ResidualCoset* l : lines)
        if (l->flat.contains(p)) return true;
      return false;
    };
    if (points.size() <= 512) {
      for (const ResidualCoset* p : points) {
        ++checked;
        if (!on_some_line(p->flat.center)) {
          c.passed = false;
          c.counterexamples.push_back(point_str(p->flat.center));
        }
      }
    } else {
      for (const ResidualOrbit& o : table.orbits) {
        if (o.rep.dim() != 0) continue;
        ++checked;
        if (!on_some_line(o.rep.flat.center)) {
          c.passed = false;
          c.counterexamples.push_back(point_str(o.rep.flat.center));
        }
      }
    }
    std::ostringstream os;
    os << checked << " residual points each lie on >= 1 of " << lines.size()
       << " residual lines";
    if (points.empty()) os << " (vacuous)";
    c.details = os.str();
    report.checks.push_back(std::move(c));
  }

  if (report.checks.empty())
    throw ConfigError("no verification checks matched the requested ids");
  return report;
}

std::vector<PairRep> pair_representation(const RootSystem& R, const OrbitTable& table) {
  std::unordered_set<std::string> pair_keys;
  for (const ResidualCoset& f : table.cosets) {
    Subsystem para = parabolic_subsystem(R, f.flat.direction);
    std::string key;
    for (std::size_t idx : para.root_indices) key += std::to_string(idx) + ",";
    key += "|";
    for (const Rat& x : f.flat.center) key += rat_str(x) + ",";
    if (!pair_keys.insert(key).second)
      throw DomainError("parabolic/center pairs collide on " + f.flat.key());

    // Reconstruction: the flat must be its center plus the subspace of the
    // span annihilated by the parabolic.
    QMat eqs;
    for (const QVec& row : R.span_complement_eqs) eqs.push_back(row);
    for (std::size_t idx : para.root_indices) eqs.push_back(R.roots[idx]);
    QMat dir = kernel_basis(eqs, R.ambient_dim);
    AffineFlat rebuilt = AffineFlat::from_point_direction(f.flat.center, dir);
    if (!(rebuilt == f.flat))
      throw DomainError("parabolic/center pair fails to reconstruct " + f.flat.key());
  }

  std::vector<PairRep> out;
  out.reserve(table.orbits.size());
  for (const ResidualOrbit& o : table.orbits) {
    Subsystem para = parabolic_subsystem(R, o.rep.flat.direction);
    out.push_back({para.root_indices, para.type_label, o.rep.flat.center});
  }
  return out;
}

ScanReport scan_parameters(const RootSystem& R, const std::vector<Rat>& ratios,
                           const EnumLimits& limits) {
  if (ratios.empty()) throw ConfigError("parameter scan needs a nonempty ratio grid");

  ScanReport report;
  report.type = R.label;
  const auto& names = R.class_names;
  if (names.size() == 1 && names[0] == "all") {
    report.single_class = true;
  } else if (names.size() == 2 && names[0] == "long" && names[1] == "short") {
    report.single_class = false;
  } else {
    throw ConfigError("parameter scan supports a single class or a long/short pair; " + R.label +
                      " has classes " + [&] {
                        std::string s;
                        for (const auto& n : names) s += (s.empty() ? "" : ",") + n;
                        return s;
                      }());
  }

  std::vector<Rat> grid = ratios;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  for (const Rat& r : grid) {
    ScanPoint pt;
    pt.ratio = r;
    pt.params = report.single_class
                    ? ParameterFunction::equal(R, r)
                    : ParameterFunction::from_named(R, {{"long", frac(1)}, {"short", r}});
    OrbitTable table = enumerate_residual(R, pt.params, limits);
    pt.orbit_counts = table.orbit_counts_by_dim();
    pt.flat_counts = table.flat_counts_by_dim();
    pt.total_orbits = table.orbits.size();
    for (const auto& [dim, n] : pt.orbit_counts)
      if (dim == 0) pt.point_orbits = n;
    report.points.push_back(std::move(pt));
  }

  for (std::size_t i = 1; i + 1 < report.points.size(); ++i) {
    const auto& prev = report.points[i - 1].orbit_counts;
    const auto& cur = report.points[i].orbit_counts;
    const auto& nxt = report.points[i + 1].orbit_counts;
    if (cur != prev && cur != nxt) report.walls.push_back(report.points[i].ratio);
  }

  std::size_t start = 0;
  for (std::size_t i = 1; i <= report.points.size(); ++i) {
    if (i == report.points.size() ||
        report.points[i].orbit_counts != report.points[start].orbit_counts) {
      report.segments.emplace_back(start, i - 1);
      start = i;
    }
  }
  return report;
}

}  // namespace residua
