#pragma once

// Finite intersections of tropical hypersurfaces, computed dually: the
// product polynomial's subdivision decomposes canonically into per-factor
// summand faces, and the intersection complex consists of the dual cells of
// the faces whose summands are all positive-dimensional.

#include "tropicast/tropical_complex.hpp"

namespace trop {

struct CellDecomposition {
  int product_face = -1;            // id in the product subdivision
  std::vector<int> summand_faces;   // per factor: face id in that factor's subdivision
  std::vector<int> summand_dims;
  bool transversal_here = false;    // dim(sum) == sum of dims
};

struct IntersectionReport {
  int n = 0, k = 0;
  TropicalComplex complex;                      // Y = intersection of the factors
  std::vector<TropicalComplex> factors;         // the input hypersurfaces
  std::shared_ptr<RegularSubdivision> product;  // subdivision of the tropical product
  std::vector<CellDecomposition> decomposition; // parallel to complex.cells
  bool proper = false;
  bool proper_vacuous = false;  // empty intersection, proper by convention
};

IntersectionReport intersect(const std::vector<TropicalComplex>& hypersurfaces);

bool is_proper(const IntersectionReport& r);

struct TransversalityCertificate {
  bool ok = false;
  struct PerCell {
    int cell;
    int dim_sum_face;
    int dims_total;
    bool ok;
  };
  std::vector<PerCell> cells;       // for the full factor set
  std::vector<std::vector<int>> failing_subsets;
};

// Checks dim(C^v) == sum dim(C_i^v) on every cell and every sub-collection
// of at least two factors (each sub-collection must also intersect properly).
// Requires a proper report; factor counts above 4 are not supported.
TransversalityCertificate is_transversal(const IntersectionReport& r);

struct MixedCell {
  int product_face;
  std::vector<int> summand_faces;
  std::vector<int> summand_dims;
};

// Top-dimensional dual cells whose summands all have dimension >= 1.
std::vector<MixedCell> mixed_cells(const IntersectionReport& r);

}  // namespace trop
