#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "residua/errors.hpp"

namespace residua {

// Exact rationals are GMP's mpq_class. mpq_class does NOT canonicalize
// values built from a numerator/denominator pair (and mpq equality assumes
// canonical form), so every construction from parts must go through frac()
// or parse_rat() below. Arithmetic on canonical operands stays canonical.
using Rat = mpq_class;

inline Rat frac(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p/q", optional surrounding whitespace. Lowest terms are not
// required on input; the result is always canonical.
Rat parse_rat(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise; lowest terms.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline int rat_sgn(const Rat& r) { return sgn(r); }
inline double rat_double(const Rat& r) { return r.get_d(); }

std::size_t hash_rat(const Rat& r);

using QVec = std::vector<Rat>;

std::size_t hash_qvec(const QVec& v);
// Lexicographic; shorter vectors first on ties of the common prefix.
int cmp_qvec(const QVec& a, const QVec& b);

Rat dot(const QVec& a, const QVec& b);
Rat norm_sq(const QVec& v);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rat& c, const QVec& v);
bool is_zero_vec(const QVec& v);
QVec zero_vec(std::size_t n);

std::vector<std::string> qvec_strings(const QVec& v);
QVec qvec_from_strings(const std::vector<std::string>& parts);

}  // namespace residua
