#pragma once

// Minimal exact LP: phase-1 simplex (Bland's rule) deciding whether
// {x >= 0 : A x = b} is nonempty.  Used for point-in-cell and
// point-in-cone membership tests.

#include "tropicast/rational.hpp"

namespace trop {

bool feasible_nonneg(const QMat& a, const QVec& b);

// Is p in conv(points)?
bool in_convex_hull(const QMat& points, const QVec& p);

// Is p in conv(points) + cone(rays)?  Either part may be empty
// (empty points means the cone itself, anchored at the origin).
bool in_polyhedron_vrep(const QMat& points, const QMat& rays, const QVec& p);

// Is g in cone(gens)?
bool in_cone(const QMat& gens, const QVec& g);

}  // namespace trop
