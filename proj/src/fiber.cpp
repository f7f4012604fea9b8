#include "tropicast/fiber.hpp"

#include <algorithm>
#include <set>

namespace trop {

LinearFunctional make_functional(const ZVec& coeffs) {
  if (is_zero_z(coeffs)) fail(Err::ZeroDirection, "zero linear functional");
  return LinearFunctional{primitive(coeffs)};
}

Rat psi_min(const Polytope& p, const LinearFunctional& psi) {
  Rat best;
  bool first = true;
  for (const auto& v : p.vertices) {
    Rat t = psi(v);
    if (first || t < best) { best = t; first = false; }
  }
  return best;
}

Rat psi_max(const Polytope& p, const LinearFunctional& psi) {
  Rat best;
  bool first = true;
  for (const auto& v : p.vertices) {
    Rat t = psi(v);
    if (first || t > best) { best = t; first = false; }
  }
  return best;
}

Polytope slice(const Polytope& p, const LinearFunctional& psi, const Rat& t) {
  QMat pts;
  for (const auto& v : p.vertices)
    if (psi(v) == t) pts.push_back(v);
  for (const auto& [i, j] : polytope_edges(p)) {
    Rat a = psi(p.vertices[i]), b = psi(p.vertices[j]);
    if ((a < t && t < b) || (b < t && t < a)) {
      Rat s = (t - a) / (b - a);
      pts.push_back(vec_add(p.vertices[i],
                            vec_scale(vec_sub(p.vertices[j], p.vertices[i]), s)));
    }
  }
  Polytope out;
  out.ambient_dim = p.ambient_dim;
  if (pts.empty()) {
    out.dim = -1;
    return out;
  }
  return convex_hull(pts);
}

namespace {

FiberPolytope fiber_with_breakpoints(const Polytope& p, const LinearFunctional& psi,
                                     std::vector<Rat> breaks) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  FiberPolytope out;
  out.psi = psi;
  if (breaks.size() <= 1) {
    // psi constant on P: integral over a degenerate interval.
    out.polytope = make_point(QVec(p.ambient_dim, Rat(0)));
    return out;
  }
  Polytope acc = make_point(QVec(p.ambient_dim, Rat(0)));
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    Rat len = breaks[i + 1] - breaks[i];
    Rat mid = (breaks[i] + breaks[i + 1]) / 2;
    Polytope q = slice(p, psi, mid);
    if (q.dim < 0) fail(Err::Internal, "fiber_polytope: empty interior slice");
    acc = minkowski_sum(acc, scale_polytope(q, len));
  }
  out.polytope = acc;
  return out;
}

}  // namespace

FiberPolytope fiber_polytope(const Polytope& p, const LinearFunctional& psi) {
  QVec breaks;
  for (const auto& v : p.vertices) breaks.push_back(psi(v));
  return fiber_with_breakpoints(p, psi, breaks);
}

FiberPolytope fiber_polytope_refined(const Polytope& p, const LinearFunctional& psi,
                                     const QVec& extra) {
  QVec breaks;
  for (const auto& v : p.vertices) breaks.push_back(psi(v));
  Rat lo = psi_min(p, psi), hi = psi_max(p, psi);
  for (const auto& t : extra)
    if (lo < t && t < hi) breaks.push_back(t);
  return fiber_with_breakpoints(p, psi, breaks);
}

FiberPolytope mixed_fiber_polytope(const std::vector<Polytope>& ps,
                                   const LinearFunctional& psi) {
  size_t r = ps.size();
  if (r == 0) fail(Err::EmptyInput, "mixed_fiber_polytope of no polytopes");
  int n = ps[0].ambient_dim;
  for (const auto& p : ps)
    if (p.ambient_dim != n) fail(Err::DimMismatch, "mixed fiber: ambient dims differ");

  // Alternating sum over nonempty subsets, sign (-1)^(r+k): accumulate the
  // positive and negative parts and take one certified difference.
  Polytope pos = make_point(QVec(n, Rat(0)));
  Polytope neg = make_point(QVec(n, Rat(0)));
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    Polytope sum;
    bool first = true;
    for (size_t i = 0; i < r; ++i) {
      if (!(mask & (1u << i))) continue;
      sum = first ? ps[i] : minkowski_sum(sum, ps[i]);
      first = false;
    }
    Polytope fib = fiber_polytope(sum, psi).polytope;
    int k = __builtin_popcount(mask);
    if (((int)r + k) % 2 == 0) pos = minkowski_sum(pos, fib);
    else neg = minkowski_sum(neg, fib);
  }
  auto diff = minkowski_difference(pos, neg);
  if (!diff)
    fail(Err::MixedFiberNotCertified, "mixed fiber polytope: difference not certified");
  FiberPolytope out;
  out.polytope = *diff;
  out.psi = psi;
  out.source = FiberSource::Mixed;
  out.factor_count = (int)r;
  return out;
}

QVec slice_argmax(const Polytope& p, const LinearFunctional& psi, const Int& i,
                  const QVec& w) {
  Rat level = Rat(i) + frac(1, 2);
  if (level < psi_min(p, psi) || level > psi_max(p, psi))
    fail(Err::EmptySlice, "slice_argmax: level outside psi(P)");
  Polytope s = slice(p, psi, level);
  if (s.dim < 0) fail(Err::EmptySlice, "slice_argmax: empty slice");
  Rat best;
  QMat arg;
  bool first = true;
  for (const auto& v : s.vertices) {
    Rat t = dot(w, v);
    if (first || t > best) {
      best = t;
      arg.clear();
      first = false;
    }
    if (t == best) arg.push_back(v);
  }
  if (arg.size() != 1) fail(Err::TieError, "slice_argmax: maximizer not unique");
  return arg[0];
}

QVec out_of_range_offset(const Polytope& p, const Polytope& f,
                         const LinearFunctional& psi, const QVec& w) {
  Rat pa = psi_min(p, psi), pb = psi_max(p, psi);
  Rat fa = psi_min(f, psi), fb = psi_max(f, psi);
  for (const Rat& t : {pa, pb, fa, fb})
    if (t.get_den() != 1)
      fail(Err::Unsupported, "offset sums need integer psi-values at the vertices");
  QVec t(p.ambient_dim, Rat(0));
  for (Int i = fb.get_num(); i < pb.get_num(); ++i)
    t = vec_add(t, slice_argmax(p, psi, i, w));
  for (Int i = pa.get_num(); i < fa.get_num(); ++i)
    t = vec_add(t, slice_argmax(p, psi, i, w));
  return t;
}

QVec face_of_fiber_polytope(const Polytope& p, const Polytope& f,
                            const LinearFunctional& psi, const QVec& w) {
  if (!(face_in_direction(p, w) == f))
    fail(Err::NotAFacet, "face_of_fiber_polytope: F is not the face of P in direction w");
  QVec t = out_of_range_offset(p, f, psi, w);
  Polytope lhs = translate(fiber_polytope(f, psi).polytope, t);
  Polytope rhs = face_in_direction(fiber_polytope(p, psi).polytope, w);
  if (!(lhs == rhs))
    fail(Err::Internal, "face_of_fiber_polytope: offset fails the face identity");
  return t;
}

QVec patchwork_offset(const Polytope& c, const Polytope& d,
                      const LinearFunctional& psi, const QVec& w) {
  if (d.dim != 1) fail(Err::NotAFacet, "patchwork_offset: D must be a segment");
  if (psi_min(d, psi) == psi_max(d, psi))
    fail(Err::NotAFacet, "patchwork_offset: psi(D) must be one-dimensional");
  Polytope cd = minkowski_sum(c, d);
  Polytope fc = face_in_direction(c, w);
  Polytope wall = face_in_direction(cd, w);
  if (!(wall == minkowski_sum(fc, d)) || wall.dim != cd.dim - 1)
    fail(Err::NotAFacet, "patchwork_offset: face_w(C) + D is not a facet of C + D");

  Polytope x = mixed_fiber_polytope({fc, d}, psi).polytope;
  Polytope y = face_in_direction(mixed_fiber_polytope({c, d}, psi).polytope, w);
  if (x.vertices.size() != y.vertices.size())
    fail(Err::Internal, "patchwork_offset: face and fiber of face are not translates");
  QVec v = vec_sub(x.vertices[0], y.vertices[0]);
  for (size_t i = 0; i < x.vertices.size(); ++i)
    if (!(vec_sub(x.vertices[i], y.vertices[i]) == v))
      fail(Err::Internal, "patchwork_offset: difference is not a single vector");
  return v;
}

}  // namespace trop
