#pragma once

// Fiber polytopes of linear functionals to R^1 as exact Minkowski integrals
// over the breakpoint partition of psi(P), mixed fiber polytopes via the
// alternating sum with certified Minkowski differences, slice argmax points,
// face offsets and the patchworking offsets of neighboring dual cells.

#include "tropicast/polytope.hpp"

namespace trop {

struct LinearFunctional {
  ZVec coeffs;  // primitive, nonzero
  Rat operator()(const QVec& x) const { return dot_zq(coeffs, x); }
};

LinearFunctional make_functional(const ZVec& coeffs);

enum class FiberSource { Plain, Mixed };

struct FiberPolytope {
  Polytope polytope;
  LinearFunctional psi;
  FiberSource source = FiberSource::Plain;
  int factor_count = 1;
};

// Minkowski integral of the slices psi^{-1}(t) cap P over psi(P): the
// partition at the vertex values, one midpoint slice per interval (exact,
// since slices vary Minkowski-linearly between breakpoints).
FiberPolytope fiber_polytope(const Polytope& p, const LinearFunctional& psi);

// Same integral over a refinement: extra breakpoints are inserted into the
// partition.  Result is invariant under refinement.
FiberPolytope fiber_polytope_refined(const Polytope& p, const LinearFunctional& psi,
                                     const QVec& extra_breakpoints);

// Mixed fiber polytope via the alternating sum over Minkowski sums of
// subsets, evaluated as one certified Minkowski difference.  Throws
// MixedFiberNotCertified if the difference is not a genuine polytope.
FiberPolytope mixed_fiber_polytope(const std::vector<Polytope>& ps,
                                   const LinearFunctional& psi);

// P cap psi^{-1}(t); empty vertex list when the slice is empty.
Polytope slice(const Polytope& p, const LinearFunctional& psi, const Rat& t);

// argmax of w over P cap psi^{-1}(i + 1/2); unique by assumption.
QVec slice_argmax(const Polytope& p, const LinearFunctional& psi, const Int& i,
                  const QVec& w);

// Sum of the slice maxima over the unit intervals of psi(P) outside psi(F);
// requires a lattice polytope (integer psi-values at the vertices).
QVec out_of_range_offset(const Polytope& p, const Polytope& f,
                         const LinearFunctional& psi, const QVec& w);

// The translation t with fiber(F) + t = face_w(fiber(P)), F = face_w(P),
// assembled from the out-of-range slice maxima and verified exactly.
QVec face_of_fiber_polytope(const Polytope& p, const Polytope& f,
                            const LinearFunctional& psi, const QVec& w);

// v(C, D, w) for a mixed cell C + D with D and psi(D) one-dimensional and
// face_w(C) + D a facet of C + D: the 0-dimensional difference
// mixedfiber(face_w(C), D) - face_w(mixedfiber(C, D)), as a vector.
QVec patchwork_offset(const Polytope& c, const Polytope& d,
                      const LinearFunctional& psi, const QVec& w);

Rat psi_min(const Polytope& p, const LinearFunctional& psi);
Rat psi_max(const Polytope& p, const LinearFunctional& psi);

}  // namespace trop
