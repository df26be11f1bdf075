#include "residua/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <unordered_map>
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
using QVecSet = std::unordered_set<QVec, QVecHash, QVecEq>;

QVec unit(std::size_t n, std::size_t i) {
  QVec v = zero_vec(n);
  v[i] = 1;
  return v;
}

const char* kValidTypes =
    "A1-A8, B2-B8, C2-C8, D4-D8, E6-E8, F4, G2, and 'x'-products such as A2xA1";

std::vector<Factor> parse_label(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  std::vector<Factor> factors;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('X', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.size() != 2 || tok[0] < 'A' || tok[0] > 'G' || !std::isdigit(static_cast<unsigned char>(tok[1])))
      throw ConfigError("unknown type '" + text + "'; valid types: " + kValidTypes);
    char l = tok[0];
    int r = tok[1] - '0';
    bool ok = (l == 'A' && r >= 1 && r <= 8) || ((l == 'B' || l == 'C') && r >= 2 && r <= 8) ||
              (l == 'D' && r >= 4 && r <= 8) || (l == 'E' && r >= 6 && r <= 8) ||
              (l == 'F' && r == 4) || (l == 'G' && r == 2);
    if (!ok)
      throw ConfigError("unsupported rank in '" + text + "'; valid types: " + kValidTypes);
    factors.push_back({l, r});
    if (next == std::string::npos) break;
    pos = next + 1;
    if (pos == s.size())
      throw ConfigError("trailing 'x' in type '" + text + "'");
  }
  if (factors.empty()) throw ConfigError("empty type label; valid types: " + std::string(kValidTypes));
  return factors;
}

QMat factor_simples(char letter, int rank, std::size_t& ambient) {
  QMat s;
  switch (letter) {
    case 'A': {
      ambient = static_cast<std::size_t>(rank) + 1;
      for (int i = 0; i < rank; ++i)
        s.push_back(sub(unit(ambient, i), unit(ambient, i + 1)));
      break;
    }
    case 'B': {
      ambient = static_cast<std::size_t>(rank);
      for (int i = 0; i + 1 < rank; ++i)
        s.push_back(sub(unit(ambient, i), unit(ambient, i + 1)));
      s.push_back(unit(ambient, ambient - 1));
      break;
    }
    case 'C': {
      ambient = static_cast<std::size_t>(rank);
      for (int i = 0; i + 1 < rank; ++i)
        s.push_back(sub(unit(ambient, i), unit(ambient, i + 1)));
      s.push_back(scale(2, unit(ambient, ambient - 1)));
      break;
    }
    case 'D': {
      ambient = static_cast<std::size_t>(rank);
      for (int i = 0; i + 1 < rank; ++i)
        s.push_back(sub(unit(ambient, i), unit(ambient, i + 1)));
      s.push_back(add(unit(ambient, ambient - 2), unit(ambient, ambient - 1)));
      break;
    }
    case 'E': {
      ambient = 8;
      QVec a1 = zero_vec(8);
      a1[0] = frac(1, 2);
      a1[7] = frac(1, 2);
      for (int i = 1; i <= 6; ++i) a1[i] = frac(-1, 2);
      s.push_back(a1);
      s.push_back(add(unit(8, 0), unit(8, 1)));
      for (int i = 0; i < rank - 2; ++i)
        s.push_back(sub(unit(8, static_cast<std::size_t>(i) + 1), unit(8, static_cast<std::size_t>(i))));
      break;
    }
    case 'F': {
      ambient = 4;
      s.push_back(sub(unit(4, 1), unit(4, 2)));
      s.push_back(sub(unit(4, 2), unit(4, 3)));
      s.push_back(unit(4, 3));
      QVec a4(4, frac(-1, 2));
      a4[0] = frac(1, 2);
      s.push_back(a4);
      break;
    }
    case 'G': {
      ambient = 3;
      s.push_back(sub(unit(3, 0), unit(3, 1)));
      QVec a2 = zero_vec(3);
      a2[0] = -2;
      a2[1] = 1;
      a2[2] = 1;
      s.push_back(a2);
      break;
    }
    default:
      throw ConfigError("unknown type letter");
  }
  return s;
}

std::size_t expected_root_count(char letter, int rank) {
  std::size_t n = static_cast<std::size_t>(rank);
  switch (letter) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return rank == 6 ? 72u : rank == 7 ? 126u : 240u;
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

mpz_class factor_weyl_order(char letter, int rank) {
  mpz_class two_pow = 1;
  switch (letter) {
    case 'A': return factorial(rank + 1);
    case 'B':
    case 'C':
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(rank));
      return two_pow * factorial(rank);
    case 'D':
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(rank - 1));
      return two_pow * factorial(rank);
    case 'E': return rank == 6 ? mpz_class(51840) : rank == 7 ? mpz_class(2903040) : mpz_class(696729600);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 1;
}

QVec embed(const QVec& v, std::size_t offset, std::size_t total) {
  QVec out = zero_vec(total);
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

// All roots as the closure of the simple system under simple reflections.
QMat root_closure(const QMat& simples) {
  QVecSet seen(simples.begin(), simples.end());
  std::deque<QVec> queue(simples.begin(), simples.end());
  while (!queue.empty()) {
    QVec v = std::move(queue.front());
    queue.pop_front();
    for (const QVec& s : simples) {
      QVec w = reflect(s, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return QMat(seen.begin(), seen.end());
}

}  // namespace

QVec reflect(const QVec& alpha, const QVec& v) {
  Rat c = 2 * dot(alpha, v) / norm_sq(alpha);
  return sub(v, scale(c, alpha));
}

RootSystem RootSystem::build(const std::string& label_in) {
  RootSystem R;
  R.factors = parse_label(label_in);

  struct FactorData {
    std::size_t ambient;
    QMat simples;
    QMat roots;
    std::vector<Rat> class_norms;  // distinct norm^2, descending (long first)
  };
  std::vector<FactorData> data;
  for (const Factor& f : R.factors) {
    FactorData d;
    d.simples = factor_simples(f.letter, f.rank, d.ambient);
    d.roots = root_closure(d.simples);
    if (d.roots.size() != expected_root_count(f.letter, f.rank))
      throw std::logic_error("root closure has wrong cardinality");
    std::vector<Rat> norms;
    for (const QVec& r : d.roots) {
      Rat n = norm_sq(r);
      if (std::find(norms.begin(), norms.end(), n) == norms.end()) norms.push_back(n);
    }
    std::sort(norms.begin(), norms.end(), [](const Rat& a, const Rat& b) { return cmp(a, b) > 0; });
    bool two_class = f.letter == 'B' || f.letter == 'C' || f.letter == 'F' || f.letter == 'G';
    if (norms.size() != (two_class ? 2u : 1u))
      throw std::logic_error("unexpected number of root lengths");
    d.class_norms = std::move(norms);
    data.push_back(std::move(d));
  }

  R.ambient_dim = 0;
  R.span_dim = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    R.ambient_dim += data[i].ambient;
    R.span_dim += static_cast<std::size_t>(R.factors[i].rank);
  }

  std::string canonical;
  for (std::size_t i = 0; i < R.factors.size(); ++i) {
    if (i) canonical += 'x';
    canonical += R.factors[i].letter;
    canonical += static_cast<char>('0' + R.factors[i].rank);
  }
  R.label = canonical;

  // Class ids in factor order, long before short.
  struct ClassKey {
    std::size_t factor;
    Rat norm;
  };
  std::vector<ClassKey> class_keys;
  bool single = R.factors.size() == 1;
  for (std::size_t i = 0; i < data.size(); ++i) {
    bool two = data[i].class_norms.size() == 2;
    for (std::size_t c = 0; c < data[i].class_norms.size(); ++c) {
      class_keys.push_back({i, data[i].class_norms[c]});
      std::string name;
      if (single)
        name = two ? (c == 0 ? "long" : "short") : "all";
      else {
        name = "f" + std::to_string(i);
        if (two) name += c == 0 ? ".long" : ".short";
      }
      R.class_names.push_back(name);
    }
  }

  std::size_t offset = 0;
  std::vector<std::pair<QVec, int>> tagged;  // root, class id
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (const QVec& simple : data[i].simples) {
      R.simple_roots.push_back(embed(simple, offset, R.ambient_dim));
      R.simple_factor.push_back(i);
    }
    for (const QVec& root : data[i].roots) {
      Rat n = norm_sq(root);
      int cls = -1;
      for (std::size_t k = 0; k < class_keys.size(); ++k)
        if (class_keys[k].factor == i && cmp(class_keys[k].norm, n) == 0) cls = static_cast<int>(k);
      assert(cls >= 0);
      tagged.emplace_back(embed(root, offset, R.ambient_dim), cls);
    }
    offset += data[i].ambient;
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return cmp_qvec(a.first, b.first) < 0; });
  for (auto& [root, cls] : tagged) {
    R.roots.push_back(std::move(root));
    R.root_class.push_back(cls);
  }

  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  for (std::size_t i = 0; i < R.roots.size(); ++i) by_hash[hash_qvec(R.roots[i])].push_back(i);
  auto index_of = [&](const QVec& v) -> std::size_t {
    auto it = by_hash.find(hash_qvec(v));
    if (it != by_hash.end())
      for (std::size_t i : it->second)
        if (cmp_qvec(R.roots[i], v) == 0) return i;
    throw std::logic_error("vector is not a root");
  };
  R.negation.resize(R.roots.size());
  for (std::size_t i = 0; i < R.roots.size(); ++i)
    R.negation[i] = index_of(scale(-1, R.roots[i]));

  // Generic direction: any d with <simple, d> = 1 for every simple root makes
  // exactly the standard positive roots positive.
  QVec ones(R.simple_roots.size(), Rat(1));
  auto d = solve(R.simple_roots, ones);
  if (!d) throw std::logic_error("simple roots are dependent");
  R.root_positive.resize(R.roots.size());
  std::size_t pos_count = 0;
  for (std::size_t i = 0; i < R.roots.size(); ++i) {
    int s = sgn(dot(R.roots[i], *d));
    if (s == 0) throw std::logic_error("regular vector is not regular");
    R.root_positive[i] = s > 0;
    if (s > 0) ++pos_count;
  }
  assert(pos_count * 2 == R.roots.size());

  R.span_complement_eqs = kernel_basis(R.simple_roots, R.ambient_dim);
  rref(R.span_complement_eqs);

  R.weyl_order = 1;
  for (const Factor& f : R.factors) R.weyl_order *= factor_weyl_order(f.letter, f.rank);
  return R;
}

bool RootSystem::in_span(const QVec& v) const {
  for (const QVec& n : span_complement_eqs)
    if (sgn(dot(n, v)) != 0) return false;
  return true;
}

bool RootSystem::is_dominant(const QVec& v) const {
  for (const QVec& s : simple_roots)
    if (sgn(dot(s, v)) < 0) return false;
  return true;
}

QVec RootSystem::apply_simple(std::size_t i, const QVec& v) const {
  return reflect(simple_roots[i], v);
}

std::pair<QVec, std::vector<std::size_t>> RootSystem::dominant_representative(const QVec& v) const {
  QVec cur = v;
  std::vector<std::size_t> word;
  for (;;) {
    std::size_t i = 0;
    for (; i < simple_roots.size(); ++i)
      if (sgn(dot(simple_roots[i], cur)) < 0) break;
    if (i == simple_roots.size()) return {cur, word};
    cur = apply_simple(i, cur);
    word.push_back(i);
  }
}

bool RootSystem::same_orbit(const QVec& v, const QVec& w) const {
  return cmp_qvec(dominant_representative(v).first, dominant_representative(w).first) == 0;
}

unsigned long long RootSystem::orbit_size(const QVec& v, std::size_t cap) const {
  QVecSet seen{v};
  std::deque<QVec> queue{v};
  while (!queue.empty()) {
    QVec cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
      QVec w = apply_simple(i, cur);
      if (seen.insert(w).second) {
        if (seen.size() > cap)
          throw ResourceError("orbit size exceeds cap of " + std::to_string(cap),
                              "visited=" + std::to_string(seen.size()));
        queue.push_back(std::move(w));
      }
    }
  }
  return seen.size();
}

Subsystem parabolic_subsystem(const RootSystem& R, const QMat& direction) {
  Subsystem out;
  for (std::size_t i = 0; i < R.roots.size(); ++i) {
    bool constant = true;
    for (const QVec& d : direction)
      if (sgn(dot(R.roots[i], d)) != 0) {
        constant = false;
        break;
      }
    if (constant) out.root_indices.push_back(i);
  }
  // Simple system: indecomposable positives (positivity inherited from R).
  QVecSet positives;
  for (std::size_t i : out.root_indices)
    if (R.root_positive[i]) positives.insert(R.roots[i]);
  for (const QVec& p : positives) {
    bool decomposable = false;
    for (const QVec& q : positives) {
      QVec r = sub(p, q);
      if (!is_zero_vec(r) && positives.count(r)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.simples.push_back(p);
  }
  std::sort(out.simples.begin(), out.simples.end(),
            [](const QVec& a, const QVec& b) { return cmp_qvec(a, b) < 0; });
  out.type_label = classify_simple_system(out.simples);
  return out;
}

std::string classify_simple_system(const QMat& simples) {
  if (simples.empty()) return "0";
  std::size_t n = simples.size();
  // bond[i][j] = 4 <a_i,a_j>^2 / (|a_i|^2 |a_j|^2), an integer 0..3 for
  // distinct simple roots of a crystallographic system.
  std::vector<std::vector<int>> bond(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat d = dot(simples[i], simples[j]);
      Rat b = 4 * d * d / (norm_sq(simples[i]) * norm_sq(simples[j]));
      if (b.get_den() != 1 || b.get_num() < 0 || b.get_num() > 3)
        throw std::logic_error("non-crystallographic bond");
      bond[i][j] = bond[j][i] = static_cast<int>(b.get_num().get_si());
    }

  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] != -1) continue;
    std::deque<std::size_t> queue{i};
    comp[i] = ncomp;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v)
        if (bond[u][v] > 0 && comp[v] == -1) {
          comp[v] = ncomp;
          queue.push_back(v);
        }
    }
    ++ncomp;
  }

  struct Label {
    char letter;
    int rank;
  };
  std::vector<Label> labels;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) nodes.push_back(i);
    int rank = static_cast<int>(nodes.size());
    auto deg = [&](std::size_t u) {
      int d = 0;
      for (std::size_t v : nodes)
        if (v != u && bond[u][v] > 0) ++d;
      return d;
    };
    int triple = 0, dbl = 0;
    std::pair<std::size_t, std::size_t> dbl_edge{0, 0};
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        if (bond[nodes[a]][nodes[b]] == 3) ++triple;
        if (bond[nodes[a]][nodes[b]] == 2) {
          ++dbl;
          dbl_edge = {nodes[a], nodes[b]};
        }
      }
    char letter;
    if (rank == 1) {
      letter = 'A';
    } else if (triple > 0) {
      if (rank != 2 || triple != 1) throw std::logic_error("bad triple bond");
      letter = 'G';
    } else if (dbl > 0) {
      if (dbl != 1) throw std::logic_error("multiple double bonds");
      for (std::size_t u : nodes)
        if (deg(u) > 2) throw std::logic_error("double bond with branch");
      auto [u, v] = dbl_edge;
      bool u_end = deg(u) == 1, v_end = deg(v) == 1;
      if (rank == 2) {
        letter = 'B';
      } else if (!u_end && !v_end) {
        if (rank != 4) throw std::logic_error("interior double bond");
        letter = 'F';
      } else {
        std::size_t endpoint = u_end ? u : v;
        std::size_t inner = u_end ? v : u;
        letter = cmp(norm_sq(simples[endpoint]), norm_sq(simples[inner])) < 0 ? 'B' : 'C';
      }
    } else {
      std::vector<std::size_t> branch;
      for (std::size_t u : nodes)
        if (deg(u) >= 3) branch.push_back(u);
      if (branch.empty()) {
        letter = 'A';
      } else if (branch.size() == 1 && deg(branch[0]) == 3) {
        // Arm lengths from the branch node classify D vs E.
        std::vector<int> arms;
        for (std::size_t v : nodes) {
          if (v == branch[0] || bond[branch[0]][v] == 0) continue;
          int len = 1;
          std::size_t prev = branch[0], cur = v;
          for (;;) {
            std::size_t next = n;
            for (std::size_t w : nodes)
              if (w != prev && w != cur && bond[cur][w] > 0) next = w;
            if (next == n) break;
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms.size() != 3) throw std::logic_error("bad branch");
        if (arms[0] == 1 && arms[1] == 1)
          letter = 'D';
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
          letter = 'E';
        else
          throw std::logic_error("unclassifiable diagram");
      } else {
        throw std::logic_error("unclassifiable diagram");
      }
    }
    labels.push_back({letter, rank});
  }
  std::sort(labels.begin(), labels.end(), [](const Label& a, const Label& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.letter < b.letter;
  });
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += 'x';
    out += labels[i].letter;
    out += std::to_string(labels[i].rank);
  }
  return out;
}

ParameterFunction ParameterFunction::equal(const RootSystem& R, const Rat& value) {
  ParameterFunction k;
  k.by_class.assign(R.num_classes(), value);
  return k;
}

ParameterFunction ParameterFunction::from_named(const RootSystem& R,
                                                const std::map<std::string, Rat>& named) {
  auto class_list = [&R]() {
    std::string s;
    for (std::size_t i = 0; i < R.class_names.size(); ++i) {
      if (i) s += ", ";
      s += R.class_names[i];
    }
    return s;
  };
  if (named.count("all")) {
    if (named.size() != 1)
      throw ConfigError("'all' cannot be combined with other parameter names");
    return equal(R, named.at("all"));
  }
  ParameterFunction k;
  k.by_class.resize(R.num_classes());
  for (const auto& [name, value] : named) {
    auto it = std::find(R.class_names.begin(), R.class_names.end(), name);
    if (it == R.class_names.end())
      throw ConfigError("unknown parameter class '" + name + "' for " + R.label +
                        "; classes: " + class_list() + " (or 'all')");
    k.by_class[static_cast<std::size_t>(it - R.class_names.begin())] = value;
  }
  if (named.size() != R.num_classes())
    throw ConfigError("parameters must cover every class of " + R.label +
                      " exactly once; classes: " + class_list() + " (or 'all')");
  return k;
}

bool ParameterFunction::is_equal_parameter() const {
  for (const Rat& v : by_class)
    if (cmp(v, by_class[0]) != 0) return false;
  return true;
}

std::string ParameterFunction::canonical_string(const RootSystem& R) const {
  std::string s;
  for (std::size_t i = 0; i < by_class.size(); ++i) {
    if (i) s += ',';
    s += R.class_names[i] + "=" + rat_str(by_class[i]);
  }
  return s;
}

}  // namespace residua
