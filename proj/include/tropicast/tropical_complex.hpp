#pragma once

// Tropical polyhedral complexes.  Cells are V-represented polyhedra
// conv(vertices) + cone(rays); an affine lineality direction appears as a
// pair of opposite rays.  Hypersurface complexes keep their defining
// subdivision, and every cell points at its dual subdivision face.

#include <memory>

#include "tropicast/subdivision.hpp"
#include "tropicast/valued_poly.hpp"

namespace trop {

struct TCCell {
  std::vector<int> vertices;  // indices into the complex vertex list
  ZMat rays;                  // primitive directions
  int dim = 0;
  Int weight = 1;
  int dual_face = -1;  // id into the subdivision face list, when present
};

struct TropicalComplex {
  int ambient_dim = 0;
  QMat vertices;
  std::vector<TCCell> cells;  // sorted by (dim, vertices, rays)
  int pure_dim = -1;          // declared dimension as a variety, -1 if not set
  std::shared_ptr<RegularSubdivision> dual;  // subdivision this complex is dual to
  std::shared_ptr<ValuedPolynomial> poly;    // defining polynomial, when built from one

  QMat cell_points(const TCCell& c) const;
};

// Tropical hypersurface of a valued polynomial, dual to the lower-hull
// subdivision of its support: one cell per subdivision face of dim >= 1,
// with dim(cell) + dim(dual face) = n.
TropicalComplex hypersurface(const ValuedPolynomial& f);

bool cell_contains(const TropicalComplex& x, const TCCell& c, const QVec& p);
bool on_complex(const TropicalComplex& x, const QVec& p);

// Fan of directions y with x + rho * y in |X| for small rho > 0, anchored at
// the origin: one cone cell per cell of X containing x.
TropicalComplex local_cone(const TropicalComplex& x, const QVec& p);

// Shared machinery: dual complex of a subdivision restricted to the faces
// accepted by `keep` (by face id).  Used by hypersurface() and intersect().
TropicalComplex dual_complex(const std::shared_ptr<RegularSubdivision>& sub,
                             const std::vector<char>& keep);

}  // namespace trop
