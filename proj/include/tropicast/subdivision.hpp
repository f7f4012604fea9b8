#pragma once

// Regular subdivisions of lattice point configurations induced by rational
// lifts: cells are projections of lower-hull facets of the lifted points.
// The face poset carries, for every face E, a rational direction w with
// argmin_a (lift(a) + w.a) = E, used for dual-cell construction and for
// decomposing faces of product subdivisions.

#include "tropicast/polytope.hpp"
#include "tropicast/rational.hpp"

namespace trop {

struct SubFace {
  std::vector<int> pts;  // indices into the support, sorted
  int dim;
  QVec expose;                      // argmin_a (lift(a) + expose.a) == pts
  std::vector<int> maximal_cells;  // ids of maximal faces containing this one
  bool maximal = false;
};

struct RegularSubdivision {
  int ambient_dim = 0;
  ZMat points;  // the support, original order, pairwise distinct
  QVec lifts;
  std::vector<SubFace> faces;      // all faces of all cells, deduplicated
  std::vector<int> maximal_faces;  // ids of the cells
  bool flat = false;               // lift affine on the support: single cell

  const SubFace& cell(int i) const { return faces[maximal_faces[i]]; }
  Polytope face_polytope(int face_id) const;
  // Face id whose point set equals `pts` (sorted), or -1.
  int find_face(const std::vector<int>& pts) const;
};

RegularSubdivision lower_hull_subdivision(const ZMat& support, const QVec& lifts);

// argmin_a (lift(a) + w.a) over the support, as a sorted index set.
std::vector<int> argmin_face(const ZMat& support, const QVec& lifts, const QVec& w);

}  // namespace trop
