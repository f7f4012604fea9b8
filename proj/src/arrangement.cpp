#include "tropicast/arrangement.hpp"

#include <algorithm>

namespace trop {

namespace {

ValuedPolynomial product_of(const std::vector<TropicalComplex>& hs) {
  ValuedPolynomial prod = *hs[0].poly;
  for (size_t i = 1; i < hs.size(); ++i) prod = trop_mul(prod, *hs[i].poly);
  return prod;
}

}  // namespace

IntersectionReport intersect(const std::vector<TropicalComplex>& hypersurfaces) {
  if (hypersurfaces.empty()) fail(Err::EmptyInput, "intersect: no hypersurfaces");
  int n = hypersurfaces[0].ambient_dim;
  for (const auto& h : hypersurfaces) {
    if (h.ambient_dim != n) fail(Err::DimMismatch, "intersect: ambient dims differ");
    if (!h.poly || !h.dual) fail(Err::Internal, "intersect: factor lacks its polynomial");
  }
  int k = (int)hypersurfaces.size();
  if (k > n) fail(Err::DimMismatch, "intersect: more hypersurfaces than dimensions");

  IntersectionReport rep;
  rep.n = n;
  rep.k = k;
  rep.factors = hypersurfaces;

  ValuedPolynomial prod = product_of(hypersurfaces);
  rep.product = std::make_shared<RegularSubdivision>(
      lower_hull_subdivision(prod.support(), prod.valuations()));
  const RegularSubdivision& s = *rep.product;

  // Decompose every face by its exposing direction and keep the faces whose
  // summands are all positive-dimensional.
  std::vector<char> keep(s.faces.size(), 0);
  std::vector<CellDecomposition> decos(s.faces.size());
  for (size_t fid = 0; fid < s.faces.size(); ++fid) {
    const SubFace& e = s.faces[fid];
    CellDecomposition d;
    d.product_face = (int)fid;
    bool all_positive = true;
    int dim_total = 0;
    for (int i = 0; i < k; ++i) {
      const auto& f = *hypersurfaces[i].poly;
      std::vector<int> arg = argmin_face(f.support(), f.valuations(), e.expose);
      int sid = hypersurfaces[i].dual->find_face(arg);
      if (sid < 0) fail(Err::Internal, "intersect: summand face not in factor subdivision");
      d.summand_faces.push_back(sid);
      int sd = hypersurfaces[i].dual->faces[sid].dim;
      d.summand_dims.push_back(sd);
      dim_total += sd;
      if (arg.size() < 2) all_positive = false;
    }
    d.transversal_here = (e.dim == dim_total);
    decos[fid] = d;
    keep[fid] = all_positive ? 1 : 0;
  }

  rep.complex = dual_complex(rep.product, keep);
  for (const auto& c : rep.complex.cells) rep.decomposition.push_back(decos[c.dual_face]);

  int dim_y = -1;
  for (const auto& c : rep.complex.cells) dim_y = std::max(dim_y, c.dim);
  if (rep.complex.cells.empty()) {
    rep.proper = true;
    rep.proper_vacuous = true;
  } else {
    rep.proper = (dim_y == n - k);
    rep.complex.pure_dim = dim_y;
  }
  return rep;
}

bool is_proper(const IntersectionReport& r) { return r.proper; }

TransversalityCertificate is_transversal(const IntersectionReport& r) {
  if (!r.proper) fail(Err::NotProper, "is_transversal: intersection is not proper");
  if (r.k > 4) fail(Err::Unsupported, "is_transversal: factor count above 4");
  TransversalityCertificate cert;
  cert.ok = true;

  for (size_t ci = 0; ci < r.complex.cells.size(); ++ci) {
    const auto& d = r.decomposition[ci];
    int total = 0;
    for (int sd : d.summand_dims) total += sd;
    int face_dim = r.product->faces[d.product_face].dim;
    bool ok = (face_dim == total);
    cert.cells.push_back({(int)ci, face_dim, total, ok});
    if (!ok) cert.ok = false;
  }
  if (r.k < 2) return cert;  // no sub-collections of size >= 2

  // Every sub-collection of size >= 2 must intersect properly and be
  // transversal along each of its cells.
  for (unsigned mask = 0; mask < (1u << r.k); ++mask) {
    int bits = __builtin_popcount(mask);
    if (bits < 2) continue;
    std::vector<TropicalComplex> subset;
    std::vector<int> ids;
    for (int i = 0; i < r.k; ++i)
      if (mask & (1u << i)) {
        subset.push_back(r.factors[i]);
        ids.push_back(i);
      }
    bool sub_ok = true;
    if (bits == r.k) {
      sub_ok = cert.ok;
    } else {
      IntersectionReport sub = intersect(subset);
      if (!sub.proper) sub_ok = false;
      for (size_t ci = 0; sub_ok && ci < sub.complex.cells.size(); ++ci) {
        const auto& d = sub.decomposition[ci];
        int total = 0;
        for (int sd : d.summand_dims) total += sd;
        if (sub.product->faces[d.product_face].dim != total) sub_ok = false;
      }
    }
    if (!sub_ok) {
      cert.ok = false;
      cert.failing_subsets.push_back(ids);
    }
  }
  return cert;
}

std::vector<MixedCell> mixed_cells(const IntersectionReport& r) {
  std::vector<MixedCell> out;
  for (int cid : r.product->maximal_faces) {
    const auto& f = *r.product;
    CellDecomposition d;
    // Recompute the decomposition for the maximal face.
    const SubFace& e = f.faces[cid];
    MixedCell mc;
    mc.product_face = cid;
    bool all_positive = true;
    for (int i = 0; i < r.k; ++i) {
      const auto& poly = *r.factors[i].poly;
      std::vector<int> arg = argmin_face(poly.support(), poly.valuations(), e.expose);
      int sid = r.factors[i].dual->find_face(arg);
      mc.summand_faces.push_back(sid);
      int sd = r.factors[i].dual->faces[sid].dim;
      mc.summand_dims.push_back(sd);
      if (sd < 1) all_positive = false;
    }
    (void)d;
    if (all_positive) out.push_back(mc);
  }
  return out;
}

}  // namespace trop
