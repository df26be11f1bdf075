#include "residua/linalg.hpp"

#include <cassert>
#include <cstddef>
#include <functional>

namespace residua {

Rat parse_rat(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw ConfigError("empty rational literal");
  std::string trimmed = text.substr(begin, end - begin + 1);
  Rat r;
  if (r.set_str(trimmed, 10) != 0)
    throw ConfigError("bad rational literal '" + text + "' (want p or p/q)");
  if (r.get_den() == 0)
    throw ConfigError("zero denominator in rational literal '" + text + "'");
  r.canonicalize();
  return r;
}

std::size_t hash_rat(const Rat& r) {
  auto hash_mpz = [](const mpz_class& z, std::size_t seed) {
    std::size_t h = seed ^ (static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x9e3779b97f4a7c15ULL);
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t limb = static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
      h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  };
  return hash_mpz(r.get_den(), hash_mpz(r.get_num(), 0xcbf29ce484222325ULL));
}

std::size_t hash_qvec(const QVec& v) {
  std::size_t h = 0x100000001b3ULL ^ v.size();
  for (const Rat& r : v) h ^= hash_rat(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

int cmp_qvec(const QVec& a, const QVec& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

Rat dot(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat norm_sq(const QVec& v) { return dot(v, v); }

QVec add(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec scale(const Rat& c, const QVec& v) {
  QVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero_vec(const QVec& v) {
  for (const Rat& r : v)
    if (sgn(r) != 0) return false;
  return true;
}

QVec zero_vec(std::size_t n) { return QVec(n, Rat(0)); }

std::vector<std::string> qvec_strings(const QVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rat& r : v) out.push_back(rat_str(r));
  return out;
}

QVec qvec_from_strings(const std::vector<std::string>& parts) {
  QVec out;
  out.reserve(parts.size());
  for (const std::string& s : parts) out.push_back(parse_rat(s));
  return out;
}

std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = 1 / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || sgn(m[i][col]) == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::size_t rank(QMat m) { return rref(m).size(); }

QMat kernel_basis(const QMat& m, std::size_t cols) {
  QMat r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  QMat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v = zero_vec(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& rhs) {
  assert(m.size() == rhs.size());
  if (m.empty()) return QVec{};
  std::size_t cols = m[0].size();
  QMat aug = m;
  for (std::size_t i = 0; i < m.size(); ++i) aug[i].push_back(rhs[i]);
  QMat reduced = aug;
  std::vector<std::size_t> pivots = rref(reduced);
  QVec x = zero_vec(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;  // row (0 ... 0 | 1)
    x[pivots[i]] = reduced[i][cols];
  }
  return x;
}

QVec project_onto_span(const QMat& basis, const QVec& v) {
  if (basis.empty()) return zero_vec(v.size());
  std::size_t k = basis.size();
  QMat gram(k, QVec(k));
  QVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], v);
  }
  auto coef = solve(gram, rhs);
  assert(coef.has_value());  // Gram matrix of independent rows is invertible
  QVec p = zero_vec(v.size());
  for (std::size_t i = 0; i < k; ++i) p = add(p, scale((*coef)[i], basis[i]));
  return p;
}

bool in_row_space(QMat m, const QVec& v) {
  std::size_t r0 = rref(m).size();
  m.push_back(v);
  return rref(m).size() == r0;
}

QMat matmul(const QMat& a, const QMat& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size(), k = b.size(), c = b[0].size();
  QMat out(n, zero_vec(c));
  for (std::size_t i = 0; i < n; ++i) {
    assert(a[i].size() == k);
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      for (std::size_t l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
    }
  }
  return out;
}

QVec matvec(const QMat& m, const QVec& v) {
  QVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

QMat transpose(const QMat& m, std::size_t cols) {
  QMat t(cols, QVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

int cmp_qmat(const QMat& a, const QMat& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp_qvec(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace residua
