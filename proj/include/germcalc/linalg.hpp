#pragma once

#include <optional>
#include <vector>

#include "germcalc/poly.hpp"

namespace germcalc {

using ScalarMatrix = std::vector<std::vector<Scalar>>;  // row-major
using RatMatrix = std::vector<std::vector<mpq_class>>;
using PolyMatrix = std::vector<std::vector<Poly>>;

size_t rank(ScalarMatrix m);
size_t rank(RatMatrix m);

/// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<size_t> rref(ScalarMatrix& m);

/// Inverse of a square matrix; nullopt when singular.
std::optional<ScalarMatrix> invert(const ScalarMatrix& m);

/// Basis of the right kernel {v : M v = 0}.
std::vector<std::vector<Scalar>> kernel_basis(ScalarMatrix m);
std::vector<std::vector<mpq_class>> kernel_basis_rat(RatMatrix m);

/// One solution of M x = b, if consistent.
std::optional<std::vector<Scalar>> solve(ScalarMatrix m, std::vector<Scalar> b);

/// Characteristic polynomial coefficients [c1..cp] of a p x p matrix with
/// polynomial entries: det(xI - M) = x^p + c1 x^{p-1} + ... + cp.
/// Faddeev-LeVerrier; exact in characteristic zero (divisions are by integers).
std::vector<Poly> char_poly(const PolyMatrix& m);

/// Determinant via the same recursion (det = (-1)^p * cp).
Poly poly_det(const PolyMatrix& m);

/// Adjugate matrix: adj(M) * M = det(M) * I.
PolyMatrix poly_adjugate(const PolyMatrix& m);

/// Realify an N x N complex matrix over Q(i) into the 2N x 2N rational matrix
/// acting on (x_1..x_N, y_1..y_N) coordinates of Z = x + iy.
RatMatrix realify(const ScalarMatrix& a);

}  // namespace germcalc
