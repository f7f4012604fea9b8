#pragma once

// Tropical lines in R^n: combinatorial types (leaf-labeled trivalent trees),
// geometric realizations, caterpillar lines with their complete-intersection
// systems, projections with many self-intersections, and the caterpillar
// bound harness.

#include <random>

#include "tropicast/projection.hpp"

namespace trop {

struct TropicalLine {
  int n = 0;
  std::vector<std::pair<int, int>> tree_edges;  // internal vertices 0..n-2
  std::vector<int> leaf_at;                     // leaf i (1..n+1) -> internal vertex
  QMat positions;                               // per internal vertex
  QVec edge_lengths;                            // parallel to tree_edges
  TropicalComplex complex;
};

// (2n-3)!!, the number of combinatorial types of non-degenerate lines.
Int count_line_types(int n);

// Explicit enumeration of leaf-labeled trivalent trees with n+1 leaves,
// each tree canonically encoded as its sorted set of leaf splits.
std::vector<std::vector<std::vector<int>>> enumerate_line_trees(int n);

// Geometric realization of a line from tree data and positive edge lengths.
TropicalLine make_line(int n, const std::vector<std::pair<int, int>>& tree_edges,
                       const std::vector<int>& leaf_at, const QVec& edge_lengths,
                       const QVec& base_position);

struct CaterpillarLine {
  TropicalLine line;
  std::vector<ValuedPolynomial> system;  // n-1 tropical linear forms cutting it out
};

// The standard caterpillar with leaves 1,2 at one end; default vertex chain
// 0, -(e1+e2), -(2,2,1,0,..), ...  Custom positions must respect the
// caterpillar edge directions.
CaterpillarLine caterpillar(int n, const QMat* vertex_positions = nullptr);

// A 2 x n integer projection whose image of the standard caterpillar has
// exactly C(n-1,2) self-intersection points, built inductively column by
// column with exact grid search and certified by counting.
ZMat lower_bound_projection(int n);

struct PerturbOptions {
  std::optional<std::vector<ValuedPolynomial>> base_forms;  // default: caterpillar system
  std::optional<ZMat> projection;                           // default: lower_bound_projection
  // offsets[i][c] = per-term valuation offsets for copy c of factor i
  std::optional<std::vector<std::vector<QVec>>> offsets;
};

struct PerturbedProductCurve {
  std::vector<ValuedPolynomial> factors;  // g_i = tropical product of the copies
  IntersectionReport report;
  ZMat projection;
  PlaneCurveImage image;
  long sip_count = 0;
  long guaranteed = 0;  // (d_1 ... d_{n-1})^2 * C(n-1,2)
};

PerturbedProductCurve perturbed_product_curve(int n, const std::vector<int>& degrees,
                                              unsigned long seed,
                                              const PerturbOptions& opt = {});

struct BoundCheck {
  long count = 0;
  long bound = 0;
  bool ok = false;
};

BoundCheck check_caterpillar_bound(const TropicalLine& line, const ZMat& a);

TropicalLine random_caterpillar(int n, std::mt19937_64& rng);
ZMat random_projection_matrix(int n, std::mt19937_64& rng);

struct SweepRow {
  int n;
  int trial;
  long count;
  long bound;
  bool ok;
};

// Independent trials of random generic projections of random caterpillars;
// degenerate projections are resampled (deterministically from the seed).
std::vector<SweepRow> sweep_caterpillar(int n, int trials, unsigned long seed);

long binom2(long m);  // C(m, 2)

}  // namespace trop
