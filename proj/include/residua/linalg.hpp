#pragma once

#include <optional>
#include <vector>

#include "residua/rational.hpp"

namespace residua {

// Rows of rationals. All routines here are exact.
using QMat = std::vector<QVec>;

// In-place reduced row echelon form: pivots scanned left to right, pivot
// entries normalized to 1, eliminated above and below, zero rows dropped.
// The result is the unique RREF basis of the row space, rows ordered by
// pivot column. Returns the pivot columns.
std::vector<std::size_t> rref(QMat& m);

std::size_t rank(QMat m);

// Canonical basis of {x : m x = 0}: one vector per free column, entry 1 at
// the free column, pivot entries filled from the RREF. Rows of the result
// are ordered by free column index.
QMat kernel_basis(const QMat& m, std::size_t cols);

// One solution of m x = rhs, or nullopt if inconsistent.
std::optional<QVec> solve(const QMat& m, const QVec& rhs);

// Orthogonal projection of v onto span(rows of basis); basis rows need not
// be orthogonal but must be independent.
QVec project_onto_span(const QMat& basis, const QVec& v);

// True iff v is a linear combination of the rows of m.
bool in_row_space(QMat m, const QVec& v);

QMat matmul(const QMat& a, const QMat& b);
QVec matvec(const QMat& m, const QVec& v);
QMat transpose(const QMat& m, std::size_t cols);

int cmp_qmat(const QMat& a, const QMat& b);

}  // namespace residua
