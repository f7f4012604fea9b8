#pragma once

// Exact rational convex-geometry kernel: vertex-represented polytopes with
// canonical (lexicographic) vertex order, beneath-beyond hulls with merged
// facets, face lattices, Minkowski sums and certified Minkowski differences,
// and cone machinery (facets of generated cones, extreme rays of H-cones).

#include "tropicast/linalg.hpp"
#include "tropicast/rational.hpp"

namespace trop {

struct Polytope {
  int ambient_dim = 0;
  QMat vertices;  // lex-sorted, irredundant
  int dim = -1;   // affine dimension; -1 only for the (never exposed) empty state

  bool operator==(const Polytope& o) const {
    return ambient_dim == o.ambient_dim && vertices == o.vertices;
  }
};

// A facet of a full-dimensional hull: outward primitive integer normal with
// normal . x <= offset on the hull and equality on `pts` (all input points
// lying on the facet, not only the extreme ones).
struct HullFacet {
  ZVec normal;
  Rat offset;
  std::vector<int> pts;
};

struct HullData {
  std::vector<int> vertex_ids;     // indices into the input, sorted
  std::vector<HullFacet> facets;   // merged facets
  // Simplicial pre-merge facets as vertex-id tuples (for volume computations).
  std::vector<std::vector<int>> simplices;
};

// Requires the input to affinely span its ambient space (dim == ambient).
HullData hull_full_dim(const QMat& pts);

Polytope convex_hull(const QMat& points);
Polytope convex_hull_z(const ZMat& points);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope face_in_direction(const Polytope& p, const QVec& w);
// Certified difference: returns r with q + r = p, or nullopt when no such
// polytope exists.  The certificate is the exact re-addition check.
std::optional<Polytope> minkowski_difference(const Polytope& p, const Polytope& q);

Polytope translate(const Polytope& p, const QVec& t);
Polytope scale_polytope(const Polytope& p, const Rat& s);
Polytope make_point(const QVec& p);
bool contains_point(const Polytope& p, const QVec& x);

// One face of a polytope's face lattice, in terms of indices into the
// polytope's vertex list, with an ambient direction exposing it as argmax.
struct PolyFace {
  std::vector<int> verts;
  int dim;
  QVec expose;  // zero vector for the whole polytope
};

// All nonempty faces, the polytope itself included; deduplicated,
// sorted by (dim, vertex ids).
std::vector<PolyFace> face_lattice(const Polytope& p);

// Vertex-index pairs forming the 1-faces.
std::vector<std::pair<int, int>> polytope_edges(const Polytope& p);

// Volume normalized to the lattice Z^n cap (direction space of aff(pts)):
// integer, equals dim! * euclidean volume in lattice coordinates.
Int normalized_volume(const ZMat& pts);

// Lattice length of a segment given by its (integer) endpoints.
Int lattice_length(const ZVec& a, const ZVec& b);

// Facets of cone(gens) through the origin, for full-dimensional generated
// cones: list of primitive integer outer normals h with h . g <= 0 for all
// generators.  (Cone may be non-pointed; a half-space yields one facet.)
ZMat cone_facets(const ZMat& gens);

struct ConeRays {
  ZMat rays;       // extreme rays of the pointed quotient, primitive
  ZMat lineality;  // basis of the lineality space, primitive
};

// Extreme rays / lineality of {u : E u = 0, G u >= 0} (rows of e/g).
ConeRays extreme_rays_of_cone(const ZMat& eqs, const ZMat& ineqs);

// Extreme rays / lineality of cone(gens).
ConeRays cone_from_generators(const QMat& gens);

}  // namespace trop
