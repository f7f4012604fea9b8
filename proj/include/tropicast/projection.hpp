#pragma once

// Rational projections x -> Ax, kernel bases, the substitution lift of a
// valued polynomial, monomial pushforwards, projected plane curves with
// self-intersection records, and the dual subdivision of the image assembled
// from mixed fiber polytopes with patchworking offsets.

#include "tropicast/arrangement.hpp"
#include "tropicast/fiber.hpp"

namespace trop {

struct RationalProjection {
  ZMat a;       // (m+1) x n integer matrix of full row rank
  ZMat kernel;  // l = n - (m+1) primitive integer rows spanning ker A over Q
};

// Hermite-reduced primitive integer kernel basis; RankError if A is rank
// deficient.
ZMat kernel_basis(const ZMat& a);

RationalProjection make_projection(const ZMat& a);

// Substitute x_i -> x_i * prod_j lambda_j^{v_i^{(j)}}: the support moves by
// the injective map alpha -> (alpha, v^{(1)}.alpha, ..., v^{(l)}.alpha).
ValuedPolynomial lift_polynomial(const ValuedPolynomial& f, const ZMat& kernel);

// Pushforward along the monomial map induced by A: alpha -> A alpha;
// collisions take the minimum valuation and are flagged.
ValuedPolynomial monomial_pushforward(const ValuedPolynomial& f, const ZMat& a);

enum class PieceKind { Edge, Ray, Line };

struct ImagePiece {
  int source_cell;  // index into the source complex cell list
  PieceKind kind;
  QVec base;   // an endpoint (Edge, Ray) or any point (Line), in R^2
  QVec dir;    // primitive direction; for Edge points from base to the other endpoint
  Rat length;  // Edge only: base + t*dir, t in [0, length]
};

struct SelfIntersection {
  QVec point;
  std::vector<std::pair<int, int>> piece_pairs;  // indices into pieces
  std::vector<std::pair<PieceKind, PieceKind>> kinds;
};

struct DualCell {
  Polytope poly;  // positioned 2-cell in R^2
  int p = 1;      // number of mixed-fiber summands
  std::vector<int> source_faces;  // source complex cells mapping onto the node
};

struct DualEdge {
  Polytope poly;  // positioned segment
  int source_piece;
};

struct ImageDualSubdivision {
  std::vector<DualCell> cells;
  std::vector<DualEdge> edges;
  Polytope hull;
  bool anchored_to_pushforward = false;
};

struct PlaneCurveImage {
  std::vector<ImagePiece> pieces;
  std::vector<SelfIntersection> sips;
  std::optional<ImageDualSubdivision> dual_subdivision;
};

// Map a pure 1-dimensional complex through a rank-2 integer matrix.
PlaneCurveImage project_curve(const TropicalComplex& curve, const ZMat& a);

// All points where the relative interiors of two non-adjacent pieces meet.
// Positive-length overlaps of non-adjacent pieces raise OverlapDegenerate.
std::vector<SelfIntersection> self_intersections(const TropicalComplex& curve,
                                                 const PlaneCurveImage& image);
PlaneCurveImage project_and_intersect(const TropicalComplex& curve, const ZMat& a);

// Dual subdivision of the projected curve, cells positioned coherently via
// patchworking offsets; supported natively for one-dimensional kernels.
// When a pushforward polynomial is supplied the result is anchored to (and
// verified against) the lower-hull subdivision of its support.
PlaneCurveImage image_dual_subdivision(const IntersectionReport& report, const ZMat& a,
                                       const ValuedPolynomial* pushforward = nullptr);

}  // namespace trop
