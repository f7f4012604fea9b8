#pragma once

// Exact linear algebra over Q and Z: rank/solve/nullspace via rational
// Gaussian elimination, Hermite normal form, integer kernels (saturated
// lattices) and lattice bases of generated sublattices.

#include "tropicast/rational.hpp"

namespace trop {

int rank_q(const QMat& m);
int affine_rank(const QMat& pts);  // dim of the affine hull spanned by the rows

// Solve A x = b for A given as rows.  Returns nullopt if inconsistent.
// The solution is the canonical one from RREF with free variables set to 0.
std::optional<QVec> solve_linear(const QMat& a, const QVec& b);

// Basis of {x : A x = 0}, deterministic (RREF free-variable basis).
QMat nullspace(const QMat& a);

// Integer versions (rows are Z vectors); nullspace cleared to primitive Z rows.
ZMat nullspace_z(const ZMat& a);

// Divide by the gcd of the entries (orientation preserved).  Zero stays zero.
ZVec primitive(const ZVec& v);
// Clear denominators and divide by gcd (orientation preserved).
ZVec primitive_q(const QVec& v);
// Same but with canonical sign: first nonzero entry positive.
ZVec primitive_signed(const ZVec& v);

// Row-style Hermite normal form of the lattice generated by the rows;
// returns the nonzero rows (a canonical lattice basis).
ZMat hnf_rows(const ZMat& m);

// Basis of the saturated integer kernel {x in Z^n : M x = 0}, rows in HNF.
ZMat integer_kernel(const ZMat& m);

// Basis (HNF rows) of the lattice generated over Z by the given rows.
ZMat generated_lattice_basis(const ZMat& gens);

// Basis of Z^n intersected with the rational row span of `gens` (saturation).
ZMat saturated_lattice_basis(const ZMat& gens);

// Given basis rows B (d x n, full row rank) and a functional u on the
// coordinates w.r.t. B, return w in Q^n with B w = u (minimum-norm-style
// particular solution w = B^T (B B^T)^{-1} u; deterministic).
QVec lift_functional(const QMat& basis_rows, const QVec& u);

// Coordinates of v in terms of basis rows: solve sum_j c_j B_j = v.
std::optional<QVec> coords_in_basis(const QMat& basis_rows, const QVec& v);

Int det_z(ZMat m);  // determinant of a square integer matrix

}  // namespace trop
