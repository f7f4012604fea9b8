#include "tropicast/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropicast/lp.hpp"

namespace trop {

namespace {

struct SFacet {
  std::vector<int> vs;  // d affinely independent point ids
  ZVec normal;          // primitive integer outward normal
  Rat offset;
  bool dead = false;
};

// Hyperplane through the given affinely independent points, oriented so that
// `inside` lies on the <= side.
bool make_facet(const QMat& pts, const std::vector<int>& vs, const QVec& inside, SFacet& out) {
  size_t d = pts[0].size();
  QMat diffs;
  for (size_t i = 1; i < vs.size(); ++i) diffs.push_back(vec_sub(pts[vs[i]], pts[vs[0]]));
  QMat ns = nullspace(diffs);
  if (ns.size() != 1) return false;
  ZVec n = primitive_q(ns[0]);
  Rat off = dot_zq(n, pts[vs[0]]);
  int s = sgn(dot_zq(n, inside) - off);
  if (s == 0) return false;
  if (s > 0) {
    n = zvec_neg(n);
    off = -off;
  }
  out.vs = vs;
  out.normal = n;
  out.offset = off;
  out.dead = false;
  (void)d;
  return true;
}

}  // namespace

HullData hull_full_dim(const QMat& pts) {
  size_t np = pts.size();
  if (np == 0) fail(Err::EmptyInput, "hull of no points");
  size_t d = pts[0].size();
  HullData res;

  if (d == 0) {
    res.vertex_ids = {0};
    return res;
  }

  std::vector<int> order(np);
  for (size_t i = 0; i < np; ++i) order[i] = (int)i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return lex_less(pts[a], pts[b]); });

  if (d == 1) {
    int lo = order.front(), hi = order.back();
    if (pts[lo][0] == pts[hi][0]) fail(Err::Internal, "hull_full_dim: not full-dimensional");
    res.vertex_ids = {std::min(lo, hi), std::max(lo, hi)};
    HullFacet fl{{Int(-1)}, -pts[lo][0], {}}, fh{{Int(1)}, pts[hi][0], {}};
    for (size_t i = 0; i < np; ++i) {
      if (pts[i][0] == pts[lo][0]) fl.pts.push_back((int)i);
      if (pts[i][0] == pts[hi][0]) fh.pts.push_back((int)i);
    }
    res.facets = {fl, fh};
    res.simplices = {{lo, hi}};
    return res;
  }

  // Initial simplex: greedily extend an affinely independent set.
  std::vector<int> simplex = {order[0]};
  QMat diffs;
  for (int idx : order) {
    if (simplex.size() == d + 1) break;
    if (idx == simplex[0]) continue;
    QMat trial = diffs;
    trial.push_back(vec_sub(pts[idx], pts[simplex[0]]));
    if (rank_q(trial) == (int)trial.size()) {
      diffs = trial;
      simplex.push_back(idx);
    }
  }
  if (simplex.size() != d + 1) fail(Err::Internal, "hull_full_dim: not full-dimensional");

  QVec inside(d, Rat(0));
  for (int v : simplex) inside = vec_add(inside, pts[v]);
  inside = vec_scale(inside, frac(1, (long)(d + 1)));

  std::vector<SFacet> facets;
  for (size_t skip = 0; skip <= d; ++skip) {
    std::vector<int> vs;
    for (size_t i = 0; i <= d; ++i)
      if (i != skip) vs.push_back(simplex[i]);
    SFacet f;
    if (!make_facet(pts, vs, inside, f)) fail(Err::Internal, "degenerate initial facet");
    facets.push_back(f);
  }

  std::set<int> in_simplex(simplex.begin(), simplex.end());
  for (int idx : order) {
    if (in_simplex.count(idx)) continue;
    const QVec& p = pts[idx];
    std::vector<int> visible;
    for (size_t f = 0; f < facets.size(); ++f) {
      if (facets[f].dead) continue;
      if (dot_zq(facets[f].normal, p) > facets[f].offset) visible.push_back((int)f);
    }
    if (visible.empty()) continue;
    // Horizon ridges appear in exactly one visible facet.
    std::map<std::vector<int>, int> ridge_count;
    for (int f : visible) {
      const auto& vs = facets[f].vs;
      for (size_t skip = 0; skip < vs.size(); ++skip) {
        std::vector<int> ridge;
        for (size_t i = 0; i < vs.size(); ++i)
          if (i != skip) ridge.push_back(vs[i]);
        std::sort(ridge.begin(), ridge.end());
        ridge_count[ridge]++;
      }
    }
    for (int f : visible) facets[f].dead = true;
    for (const auto& [ridge, cnt] : ridge_count) {
      if (cnt != 1) continue;
      std::vector<int> vs = ridge;
      vs.push_back(idx);
      SFacet nf;
      if (!make_facet(pts, vs, inside, nf)) fail(Err::Internal, "degenerate horizon facet");
      facets.push_back(nf);
    }
  }

  // Merge coplanar simplicial facets.
  std::map<std::pair<ZVec, Rat>, HullFacet> merged;
  for (const auto& f : facets) {
    if (f.dead) continue;
    res.simplices.push_back(f.vs);
    merged.try_emplace({f.normal, f.offset}, HullFacet{f.normal, f.offset, {}});
  }
  for (auto& [key, hf] : merged) {
    for (size_t i = 0; i < np; ++i)
      if (dot_zq(hf.normal, pts[i]) == hf.offset) hf.pts.push_back((int)i);
  }
  for (auto& [key, hf] : merged) res.facets.push_back(hf);

  // True vertices: points whose active facet normals span the full space.
  for (size_t i = 0; i < np; ++i) {
    QMat normals;
    for (const auto& hf : res.facets)
      if (dot_zq(hf.normal, pts[i]) == hf.offset) normals.push_back(to_q(hf.normal));
    if (!normals.empty() && rank_q(normals) == (int)d) res.vertex_ids.push_back((int)i);
  }
  return res;
}

Polytope convex_hull(const QMat& points) {
  if (points.empty()) fail(Err::EmptyInput, "convex_hull of empty set");
  size_t n = points[0].size();
  QMat pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope out;
  out.ambient_dim = (int)n;
  if (pts.size() == 1) {
    out.vertices = pts;
    out.dim = 0;
    return out;
  }
  const QVec& p0 = pts[0];
  QMat basis;
  for (const auto& p : pts) {
    QMat trial = basis;
    trial.push_back(vec_sub(p, p0));
    if (rank_q(trial) == (int)trial.size()) basis = trial;
  }
  size_t d = basis.size();
  QMat coords;
  for (const auto& p : pts) {
    auto c = coords_in_basis(basis, vec_sub(p, p0));
    if (!c) fail(Err::Internal, "convex_hull: point outside affine hull");
    coords.push_back(*c);
  }
  HullData h = hull_full_dim(coords);
  for (int id : h.vertex_ids) out.vertices.push_back(pts[id]);
  std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
  out.dim = (int)d;
  return out;
}

Polytope convex_hull_z(const ZMat& points) {
  QMat q;
  for (const auto& p : points) q.push_back(to_q(p));
  return convex_hull(q);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim != q.ambient_dim) fail(Err::DimMismatch, "minkowski_sum: ambient dims differ");
  QMat sums;
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) sums.push_back(vec_add(a, b));
  return convex_hull(sums);
}

Polytope face_in_direction(const Polytope& p, const QVec& w) {
  if (is_zero(w)) fail(Err::ZeroDirection, "face_in_direction: zero direction");
  if ((int)w.size() != p.ambient_dim) fail(Err::DimMismatch, "face_in_direction: dim mismatch");
  Rat best;
  bool first = true;
  for (const auto& v : p.vertices) {
    Rat val = dot(w, v);
    if (first || val > best) { best = val; first = false; }
  }
  Polytope out;
  out.ambient_dim = p.ambient_dim;
  for (const auto& v : p.vertices)
    if (dot(w, v) == best) out.vertices.push_back(v);
  out.dim = affine_rank(out.vertices);
  return out;
}

std::optional<Polytope> minkowski_difference(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim != q.ambient_dim)
    fail(Err::DimMismatch, "minkowski_difference: ambient dims differ");
  if (p.dim == 0) {
    if (q.dim != 0) return std::nullopt;
    return make_point(vec_sub(p.vertices[0], q.vertices[0]));
  }
  // Candidate vertices of r: for each vertex v of p exposed by w, subtract the
  // vertex of q exposed by the same w; any failure of unique exposure means
  // the difference cannot exist.
  const QVec& p0 = p.vertices[0];
  QMat basis;
  for (const auto& v : p.vertices) {
    QMat trial = basis;
    trial.push_back(vec_sub(v, p0));
    if (rank_q(trial) == (int)trial.size()) basis = trial;
  }
  QMat coords;
  for (const auto& v : p.vertices) coords.push_back(*coords_in_basis(basis, vec_sub(v, p0)));
  HullData h = hull_full_dim(coords);
  QMat r_verts;
  for (int vid : h.vertex_ids) {
    QVec wd(basis.size(), Rat(0));
    for (const auto& f : h.facets)
      if (dot_zq(f.normal, coords[vid]) == f.offset) wd = vec_add(wd, to_q(f.normal));
    QVec w = lift_functional(basis, wd);
    Polytope qf = face_in_direction(q, w);
    if (qf.vertices.size() != 1) return std::nullopt;
    r_verts.push_back(vec_sub(p.vertices[vid], qf.vertices[0]));
  }
  Polytope r = convex_hull(r_verts);
  if (!(minkowski_sum(q, r) == p)) return std::nullopt;
  return r;
}

Polytope translate(const Polytope& p, const QVec& t) {
  Polytope out = p;
  for (auto& v : out.vertices) v = vec_add(v, t);
  return out;
}

Polytope scale_polytope(const Polytope& p, const Rat& s) {
  if (s == 0) {
    Polytope out;
    out.ambient_dim = p.ambient_dim;
    out.vertices = {QVec(p.ambient_dim, Rat(0))};
    out.dim = 0;
    return out;
  }
  QMat verts;
  for (const auto& v : p.vertices) verts.push_back(vec_scale(v, s));
  return convex_hull(verts);
}

Polytope make_point(const QVec& p) {
  Polytope out;
  out.ambient_dim = (int)p.size();
  out.vertices = {p};
  out.dim = 0;
  return out;
}

bool contains_point(const Polytope& p, const QVec& x) {
  return in_convex_hull(p.vertices, x);
}

std::vector<PolyFace> face_lattice(const Polytope& p) {
  std::vector<PolyFace> out;
  size_t nv = p.vertices.size();
  std::vector<int> all(nv);
  for (size_t i = 0; i < nv; ++i) all[i] = (int)i;
  if (p.dim <= 0) {
    out.push_back({all, 0, QVec(p.ambient_dim, Rat(0))});
    return out;
  }
  const QVec& p0 = p.vertices[0];
  QMat basis;
  for (const auto& v : p.vertices) {
    QMat trial = basis;
    trial.push_back(vec_sub(v, p0));
    if (rank_q(trial) == (int)trial.size()) basis = trial;
  }
  QMat coords;
  for (const auto& v : p.vertices) coords.push_back(*coords_in_basis(basis, vec_sub(v, p0)));
  HullData h = hull_full_dim(coords);

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  seen.insert(all);
  for (const auto& f : h.facets) {
    std::vector<int> s = f.pts;
    std::sort(s.begin(), s.end());
    if (seen.insert(s).second) frontier.push_back(s);
  }
  std::vector<std::vector<int>> faces(frontier);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& f : frontier) {
      for (const auto& facet : h.facets) {
        std::vector<int> inter;
        std::set<int> fs(facet.pts.begin(), facet.pts.end());
        for (int v : f)
          if (fs.count(v)) inter.push_back(v);
        if (inter.empty() || inter == f) continue;
        if (seen.insert(inter).second) next.push_back(inter);
      }
    }
    faces.insert(faces.end(), next.begin(), next.end());
    frontier = next;
  }

  out.push_back({all, p.dim, QVec(p.ambient_dim, Rat(0))});
  for (const auto& fverts : faces) {
    PolyFace pf;
    pf.verts = fverts;
    QMat member;
    for (int v : fverts) member.push_back(p.vertices[v]);
    pf.dim = affine_rank(member);
    QVec wd(basis.size(), Rat(0));
    std::set<int> fs(fverts.begin(), fverts.end());
    for (const auto& facet : h.facets) {
      bool contains = true;
      for (int v : fverts)
        if (dot_zq(facet.normal, coords[v]) != facet.offset) { contains = false; break; }
      if (contains) wd = vec_add(wd, to_q(facet.normal));
    }
    pf.expose = lift_functional(basis, wd);
    out.push_back(pf);
  }
  std::sort(out.begin(), out.end(), [](const PolyFace& a, const PolyFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });
  return out;
}

std::vector<std::pair<int, int>> polytope_edges(const Polytope& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& f : face_lattice(p)) {
    if (f.dim != 1) continue;
    // Endpoints of an edge are its extreme points along any direction on it;
    // with irredundant vertex lists an edge face has exactly two vertices.
    if (f.verts.size() != 2) fail(Err::Internal, "edge with interior vertex");
    out.push_back({f.verts[0], f.verts[1]});
  }
  return out;
}

Int normalized_volume(const ZMat& pts_in) {
  ZMat pts = pts_in;
  std::sort(pts.begin(), pts.end(), lex_less_z);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) fail(Err::EmptyInput, "normalized_volume of empty set");
  ZMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(zvec_sub(pts[i], pts[0]));
  if (diffs.empty()) return 1;
  ZMat lat = saturated_lattice_basis(diffs);
  size_t d = lat.size();
  if (d == 0) return 1;
  QMat latq;
  for (const auto& row : lat) latq.push_back(to_q(row));
  QMat coords;
  for (const auto& p : pts) {
    auto c = coords_in_basis(latq, to_q(zvec_sub(p, pts[0])));
    if (!c) fail(Err::Internal, "normalized_volume: point outside lattice span");
    coords.push_back(*c);
  }
  if (d == 1) {
    Rat lo = coords[0][0], hi = coords[0][0];
    for (const auto& c : coords) {
      lo = std::min(lo, c[0]);
      hi = std::max(hi, c[0]);
    }
    Rat len = hi - lo;
    return to_z({len})[0];
  }
  HullData h = hull_full_dim(coords);
  int apex = h.vertex_ids[0];
  Int vol = 0;
  for (const auto& simplex : h.simplices) {
    if (std::find(simplex.begin(), simplex.end(), apex) != simplex.end()) continue;
    ZMat m;
    for (int v : simplex) m.push_back(to_z(vec_sub(coords[v], coords[apex])));
    vol += abs(det_z(m));
  }
  return vol;
}

Int lattice_length(const ZVec& a, const ZVec& b) {
  Int g = 0;
  for (size_t i = 0; i < a.size(); ++i) g = gcd(g, a[i] - b[i]);
  return abs(g);
}

ZMat cone_facets(const ZMat& gens) {
  QMat pts;
  pts.push_back(QVec(gens.empty() ? 0 : gens[0].size(), Rat(0)));
  for (const auto& g : gens) pts.push_back(to_q(g));
  HullData h = hull_full_dim(pts);
  ZMat out;
  for (const auto& f : h.facets)
    if (f.offset == 0) out.push_back(f.normal);
  std::sort(out.begin(), out.end(), lex_less_z);
  return out;
}

ConeRays extreme_rays_of_cone(const ZMat& eqs, const ZMat& ineqs) {
  ConeRays out;
  size_t n = 0;
  if (!eqs.empty()) n = eqs[0].size();
  else if (!ineqs.empty()) n = ineqs[0].size();
  else fail(Err::EmptyInput, "cone with no constraints");

  ZMat all = eqs;
  all.insert(all.end(), ineqs.begin(), ineqs.end());
  out.lineality = nullspace_z(all);

  ZMat m = eqs.empty() ? ZMat{} : nullspace_z(eqs);
  if (eqs.empty()) {
    for (size_t i = 0; i < n; ++i) {
      ZVec e(n, Int(0));
      e[i] = 1;
      m.push_back(e);
    }
  }
  // Complement of the lineality inside null(eqs).
  QMat stack;
  for (const auto& row : out.lineality) stack.push_back(to_q(row));
  ZMat comp;
  for (const auto& row : m) {
    QMat trial = stack;
    trial.push_back(to_q(row));
    if (rank_q(trial) == (int)trial.size()) {
      stack = trial;
      comp.push_back(row);
    }
  }
  size_t dq = comp.size();
  if (dq == 0) return out;

  ZMat gq;
  for (const auto& g : ineqs) {
    ZVec row(dq);
    bool zero = true;
    for (size_t j = 0; j < dq; ++j) {
      row[j] = dot_z(g, comp[j]);
      if (row[j] != 0) zero = false;
    }
    if (!zero) gq.push_back(row);
  }
  if (gq.empty()) fail(Err::Internal, "extreme_rays_of_cone: quotient unconstrained");

  if (dq == 1) {
    // One coordinate: candidates +-1, keep the feasible sign(s).
    for (int s : {1, -1}) {
      bool ok = true;
      for (const auto& row : gq)
        if (s * row[0] < 0) { ok = false; break; }
      if (ok) {
        ZVec u(n, Int(0));
        for (size_t i = 0; i < n; ++i) u[i] = s * comp[0][i];
        out.rays.push_back(primitive(u));
      }
    }
    std::sort(out.rays.begin(), out.rays.end(), lex_less_z);
    return out;
  }

  ZMat facets = cone_facets(gq);
  for (const auto& h : facets) {
    ZVec cand = zvec_neg(h);  // outward facet normal of the dual cone -> extreme ray
    bool ok = true;
    for (const auto& row : gq)
      if (dot_z(row, cand) < 0) { ok = false; break; }
    if (!ok) continue;
    ZVec u(n, Int(0));
    for (size_t j = 0; j < dq; ++j)
      for (size_t i = 0; i < n; ++i) u[i] += cand[j] * comp[j][i];
    out.rays.push_back(primitive(u));
  }
  std::sort(out.rays.begin(), out.rays.end(), lex_less_z);
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

ConeRays cone_from_generators(const QMat& gens_in) {
  QMat gens;
  for (const auto& g : gens_in)
    if (!is_zero(g)) gens.push_back(to_q(primitive_q(g)));
  ConeRays out;
  if (gens.empty()) return out;
  size_t n = gens[0].size();
  // Basis of the linear span.
  QMat span;
  for (const auto& g : gens) {
    QMat trial = span;
    trial.push_back(g);
    if (rank_q(trial) == (int)trial.size()) span = trial;
  }
  QMat coords;
  for (const auto& g : gens) coords.push_back(*coords_in_basis(span, g));
  ZMat gz;
  for (const auto& c : coords) gz.push_back(primitive_q(c));
  ZMat facets = cone_facets(gz);

  // H-representation in ambient coordinates: span-perp equalities plus
  // lifted facet inequalities (inner orientation).
  ZMat span_z;
  for (const auto& row : span) span_z.push_back(primitive_q(row));
  ZMat eqs = nullspace_z(span_z);  // rows orthogonal to span? no: null of span rows
  // nullspace_z(span_z) gives {x : span . x = 0}; we need functionals vanishing
  // on the span, which is the same set viewed as row vectors.
  ZMat ineqs;
  for (const auto& h : facets) {
    QVec lifted = lift_functional(span, to_q(zvec_neg(h)));
    ineqs.push_back(primitive_q(lifted));
  }
  if (ineqs.empty()) {
    // Cone equals its span: pure lineality.
    out.lineality = span_z;
    return out;
  }
  return extreme_rays_of_cone(eqs, ineqs);
}

}  // namespace trop
