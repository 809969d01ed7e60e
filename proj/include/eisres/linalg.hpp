#ifndef EISRES_LINALG_HPP
#define EISRES_LINALG_HPP

// Small dense exact linear algebra over Q and Z.

#include "eisres/real.hpp"

#include <cstddef>
#include <vector>

namespace eisres {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major
using ZVector = std::vector<Integer>;
using ZMatrix = std::vector<ZVector>;

QMatrix identity_matrix(std::size_t n);
QMatrix transpose(const QMatrix& m);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
/// Row vector times matrix.
QVector multiply(const QVector& v, const QMatrix& m);
Rational determinant(QMatrix m);
/// Throws Error(SingularGram) if singular; `what` names the caller's matrix.
QMatrix inverse(QMatrix m, const char* what = "matrix");
std::size_t rank(QMatrix m);

/// Hermite normal form of the row lattice: rows with strictly increasing
/// pivot columns, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
ZMatrix hermite_normal_form(ZMatrix rows);
/// Canonical basis of the Z-span of rational row vectors (HNF after
/// clearing a common denominator).
QMatrix lattice_hnf(const QMatrix& rows);
/// Reduce v modulo the row lattice of an HNF basis (canonical residue).
ZVector reduce_mod_hnf(ZVector v, const ZMatrix& hnf);

Integer common_denominator(const QMatrix& m);
bool is_integral(const QVector& v);

}  // namespace eisres

#endif
