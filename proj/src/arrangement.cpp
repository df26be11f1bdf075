#include "residua/arrangement.hpp"

#include <cassert>

#include "residua/errors.hpp"

namespace residua {

namespace {

// Shared tail of every constructor: eqs is already the RREF of a consistent
// system; fill in direction, offset, center.
void finalize(AffineFlat& f) {
  QMat normals;
  normals.reserve(f.eqs.size());
  for (const QVec& row : f.eqs) normals.emplace_back(row.begin(), row.begin() + f.ambient);
  f.direction = kernel_basis(normals, f.ambient);
  f.offset = zero_vec(f.ambient);
  for (const QVec& row : f.eqs) {
    std::size_t pivot = 0;
    while (pivot < f.ambient && sgn(row[pivot]) == 0) ++pivot;
    assert(pivot < f.ambient);
    f.offset[pivot] = row[f.ambient];
  }
  f.center = sub(f.offset, project_onto_span(f.direction, f.offset));
  assert(f.contains(f.center));
}

bool inconsistent_rref(const QMat& eqs, std::size_t ambient) {
  for (const QVec& row : eqs) {
    bool zero_normal = true;
    for (std::size_t j = 0; j < ambient; ++j)
      if (sgn(row[j]) != 0) {
        zero_normal = false;
        break;
      }
    if (zero_normal) return true;  // row (0 ... 0 | 1) after RREF
  }
  return false;
}

}  // namespace

AffineFlat AffineFlat::full_space(std::size_t ambient) {
  AffineFlat f;
  f.ambient = ambient;
  finalize(f);
  return f;
}

AffineFlat AffineFlat::from_equations(std::size_t ambient, QMat equations) {
  AffineFlat f;
  f.ambient = ambient;
  f.eqs = std::move(equations);
  rref(f.eqs);
  if (inconsistent_rref(f.eqs, ambient))
    throw DomainError("inconsistent equation system");
  finalize(f);
  return f;
}

AffineFlat AffineFlat::from_point_direction(const QVec& point, const QMat& direction) {
  std::size_t ambient = point.size();
  QMat normals = kernel_basis(direction, ambient);
  QMat eqs;
  eqs.reserve(normals.size());
  for (QVec& n : normals) {
    Rat c = dot(n, point);
    n.push_back(std::move(c));
    eqs.push_back(std::move(n));
  }
  AffineFlat f;
  f.ambient = ambient;
  f.eqs = std::move(eqs);
  rref(f.eqs);
  finalize(f);
  return f;
}

AffineFlat AffineFlat::point_flat(const QVec& p) {
  return from_point_direction(p, QMat{});
}

bool AffineFlat::contains(const QVec& p) const {
  for (const QVec& row : eqs) {
    Rat v = 0;
    for (std::size_t j = 0; j < ambient; ++j) v += row[j] * p[j];
    if (sgn(v - row[ambient]) != 0) return false;
  }
  return true;
}

bool AffineFlat::is_constant(const QVec& normal) const {
  for (const QVec& d : direction)
    if (sgn(dot(normal, d)) != 0) return false;
  return true;
}

std::string AffineFlat::key() const {
  std::string s = std::to_string(ambient);
  for (const QVec& row : eqs) {
    s += ';';
    for (const Rat& r : row) {
      s += r.get_str();
      s += ',';
    }
  }
  return s;
}

std::size_t AffineFlat::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ ambient;
  for (const QVec& row : eqs) h ^= hash_qvec(row) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

int AffineFlat::cmp(const AffineFlat& other) const {
  if (ambient != other.ambient) return ambient < other.ambient ? -1 : 1;
  if (eqs.size() != other.eqs.size()) return eqs.size() < other.eqs.size() ? -1 : 1;
  return cmp_qmat(eqs, other.eqs);
}

std::pair<CutResult, AffineFlat> intersect(const AffineFlat& L, const QVec& normal,
                                           const Rat& value) {
  // Reduce the new row by the existing RREF rows, then classify.
  QVec row = normal;
  row.push_back(value);
  for (const QVec& eq : L.eqs) {
    std::size_t pivot = 0;
    while (pivot < L.ambient && sgn(eq[pivot]) == 0) ++pivot;
    if (sgn(row[pivot]) == 0) continue;
    Rat f = row[pivot];
    for (std::size_t j = pivot; j <= L.ambient; ++j) row[j] -= f * eq[j];
  }
  bool zero_normal = true;
  for (std::size_t j = 0; j < L.ambient; ++j)
    if (sgn(row[j]) != 0) {
      zero_normal = false;
      break;
    }
  if (zero_normal)
    return {sgn(row[L.ambient]) == 0 ? CutResult::Contains : CutResult::Empty, AffineFlat{}};
  QMat eqs = L.eqs;
  eqs.push_back(std::move(row));
  AffineFlat f;
  f.ambient = L.ambient;
  f.eqs = std::move(eqs);
  rref(f.eqs);
  finalize(f);
  return {CutResult::Proper, std::move(f)};
}

AffineFlat span_flat(const RootSystem& R) {
  QMat eqs;
  eqs.reserve(R.span_complement_eqs.size());
  for (const QVec& n : R.span_complement_eqs) {
    QVec row = n;
    row.push_back(Rat(0));
    eqs.push_back(std::move(row));
  }
  return AffineFlat::from_equations(R.ambient_dim, std::move(eqs));
}

IndexReport order_point(const RootSystem& R, const ParameterFunction& k, const QVec& v) {
  if (v.size() != R.ambient_dim) throw DomainError("point has wrong dimension");
  if (!R.in_span(v)) throw DomainError("point lies outside the span of the roots");
  IndexReport rep;
  rep.codim = static_cast<long>(R.span_dim);
  for (std::size_t i = 0; i < R.num_roots(); ++i) {
    Rat val = dot(R.roots[i], v);
    if (cmp(val, k.of_root(R, i)) == 0) {
      ++rep.hits;
      rep.hit_roots.push_back(i);
    }
    if (sgn(val) == 0) {
      ++rep.zeros;
      rep.zero_roots.push_back(i);
    }
  }
  rep.index = rep.hits - rep.zeros;
  rep.order = rep.index - rep.codim;
  return rep;
}

IndexReport order_flat(const RootSystem& R, const ParameterFunction& k, const AffineFlat& L) {
  if (L.ambient != R.ambient_dim) throw DomainError("flat has wrong ambient dimension");
  for (const QVec& d : L.direction)
    if (!R.in_span(d)) throw DomainError("flat is not contained in the span of the roots");
  if (!R.in_span(L.offset)) throw DomainError("flat is not contained in the span of the roots");
  if (L.dim() > R.span_dim) throw DomainError("flat is larger than the span of the roots");

  IndexReport rep;
  rep.codim = static_cast<long>(R.span_dim - L.dim());
  for (std::size_t i = 0; i < R.num_roots(); ++i) {
    if (!L.is_constant(R.roots[i])) continue;
    Rat val = L.value_of(R.roots[i]);
    // The same root evaluated at the center must agree: the center is the
    // point the flat reduces to in the perpendicular of its direction.
    if (cmp(val, dot(R.roots[i], L.center)) != 0)
      throw std::logic_error("constant root disagrees between offset and center");
    if (cmp(val, k.of_root(R, i)) == 0) {
      ++rep.hits;
      rep.hit_roots.push_back(i);
    }
    if (sgn(val) == 0) {
      ++rep.zeros;
      rep.zero_roots.push_back(i);
    }
  }
  rep.index = rep.hits - rep.zeros;
  rep.order = rep.index - rep.codim;
  return rep;
}

}  // namespace residua
