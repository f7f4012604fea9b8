#pragma once

// Shared test utilities: independent oracles (LP membership, pairwise-chord
// slicing, unit-interval fiber sums) and small random generators.  Oracles
// here must not share the code path of the operation they check.

#include <random>

#include "tropicast/lp.hpp"
#include "tropicast/polytope.hpp"
#include "tropicast/valued_poly.hpp"

namespace testsupport {

using namespace trop;

// LP membership oracle: p in conv(S)?  Independent of the hull construction.
inline bool lp_in_hull(const QMat& s, const QVec& p) { return in_convex_hull(s, p); }

// Brute-force extreme-point test: p is a vertex of conv(S) iff it is not in
// the hull of the other points.
inline bool lp_is_vertex(const QMat& s, const QVec& p) {
  QMat others;
  for (const auto& q : s)
    if (!(q == p)) others.push_back(q);
  if (others.empty()) return true;
  return !lp_in_hull(others, p);
}

// Slice oracle: hull of all pairwise chord crossings with the hyperplane
// psi = t (no edge enumeration).
inline Polytope chord_slice(const Polytope& p, const ZVec& psi, const Rat& t) {
  QMat pts;
  for (const auto& v : p.vertices)
    if (dot_zq(psi, v) == t) pts.push_back(v);
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    for (size_t j = i + 1; j < p.vertices.size(); ++j) {
      Rat a = dot_zq(psi, p.vertices[i]), b = dot_zq(psi, p.vertices[j]);
      if ((a < t && t < b) || (b < t && t < a)) {
        Rat s = (t - a) / (b - a);
        pts.push_back(vec_add(p.vertices[i],
                              vec_scale(vec_sub(p.vertices[j], p.vertices[i]), s)));
      }
    }
  }
  if (pts.empty()) {
    Polytope out;
    out.ambient_dim = p.ambient_dim;
    out.dim = -1;
    return out;
  }
  return convex_hull(pts);
}

// Fiber polytope by the unit-interval sum (lattice polytopes, integer psi).
inline Polytope unit_interval_fiber(const Polytope& p, const ZVec& psi) {
  Rat lo, hi;
  bool first = true;
  for (const auto& v : p.vertices) {
    Rat t = dot_zq(psi, v);
    if (first) { lo = hi = t; first = false; }
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  Polytope acc = make_point(QVec(p.ambient_dim, Rat(0)));
  for (Int i = lo.get_num(); i < hi.get_num(); ++i) {
    Polytope s = chord_slice(p, psi, Rat(i) + frac(1, 2));
    acc = minkowski_sum(acc, s);
  }
  return acc;
}

inline Rat rand_rat(std::mt19937_64& rng, int span = 6, int maxden = 4) {
  std::uniform_int_distribution<int> num(-span, span), den(1, maxden);
  return frac(num(rng), den(rng));
}

inline QVec rand_qvec(std::mt19937_64& rng, int n, int span = 6, int maxden = 4) {
  QVec v(n);
  for (int i = 0; i < n; ++i) v[i] = rand_rat(rng, span, maxden);
  return v;
}

inline ZVec rand_zvec(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ZVec v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

// Random full-dimensional lattice polytope in [0, span]^n.
inline Polytope rand_lattice_polytope(std::mt19937_64& rng, int n, int npts = 8,
                                      int span = 4) {
  while (true) {
    ZMat pts;
    for (int i = 0; i < npts; ++i) pts.push_back(rand_zvec(rng, n, 0, span));
    Polytope p = convex_hull_z(pts);
    if (p.dim == n) return p;
  }
}

inline ZVec rand_primitive(std::mt19937_64& rng, int n, int span = 3) {
  while (true) {
    ZVec v = rand_zvec(rng, n, -span, span);
    if (!is_zero_z(v)) return primitive(v);
  }
}

}  // namespace testsupport
