#include "tropicast/projection.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace trop {

namespace {

Rat cross2(const QVec& a, const QVec& b) { return a[0] * b[1] - a[1] * b[0]; }

QVec apply_matrix(const ZMat& a, const QVec& x) {
  QVec out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] = dot_zq(a[i], x);
  return out;
}

Polytope apply_matrix_polytope(const ZMat& a, const Polytope& p) {
  QMat verts;
  for (const auto& v : p.vertices) verts.push_back(apply_matrix(a, v));
  return convex_hull(verts);
}

bool param_in_relint(const ImagePiece& pc, const Rat& s) {
  switch (pc.kind) {
    case PieceKind::Edge: return s > 0 && s < pc.length;
    case PieceKind::Ray: return s > 0;
    case PieceKind::Line: return true;
  }
  return false;
}

// Exact area of a convex polygon given by its (unsorted) vertex list.
Rat polygon_area(const Polytope& p) {
  if (p.dim < 2) return 0;
  QVec c(2, Rat(0));
  for (const auto& v : p.vertices) c = vec_add(c, v);
  c = vec_scale(c, frac(1, (long)p.vertices.size()));
  QMat pts = p.vertices;
  auto half = [&](const QVec& q) { return (q[1] > 0 || (q[1] == 0 && q[0] > 0)) ? 0 : 1; };
  std::sort(pts.begin(), pts.end(), [&](const QVec& a, const QVec& b) {
    QVec qa = vec_sub(a, c), qb = vec_sub(b, c);
    int ha = half(qa), hb = half(qb);
    if (ha != hb) return ha < hb;
    return cross2(qa, qb) > 0;
  });
  Rat area = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const QVec& u = pts[i];
    const QVec& v = pts[(i + 1) % pts.size()];
    area += u[0] * v[1] - u[1] * v[0];
  }
  return abs(area) / 2;
}

}  // namespace

ZMat kernel_basis(const ZMat& a) {
  if (a.empty()) fail(Err::EmptyInput, "kernel_basis: empty matrix");
  QMat aq;
  for (const auto& row : a) aq.push_back(to_q(row));
  if (rank_q(aq) != (int)a.size()) fail(Err::RankError, "kernel_basis: matrix is rank deficient");
  ZMat k = integer_kernel(a);
  for (auto& row : k) row = primitive(row);
  return k;
}

RationalProjection make_projection(const ZMat& a) {
  RationalProjection p;
  p.a = a;
  p.kernel = kernel_basis(a);
  return p;
}

ValuedPolynomial lift_polynomial(const ValuedPolynomial& f, const ZMat& kernel) {
  for (const auto& v : kernel)
    if ((int)v.size() != f.n_vars) fail(Err::DimMismatch, "lift: kernel vector arity mismatch");
  ValuedPolynomial out;
  out.n_vars = f.n_vars + (int)kernel.size();
  out.prime = f.prime;
  for (const auto& t : f.terms) {
    Term nt = t;
    for (const auto& v : kernel) nt.exp.push_back(dot_z(v, t.exp));
    out.terms.push_back(nt);
  }
  return out;
}

ValuedPolynomial monomial_pushforward(const ValuedPolynomial& f, const ZMat& a) {
  ValuedPolynomial out;
  out.n_vars = (int)a.size();
  out.prime = f.prime;
  std::map<ZVec, std::pair<Term, int>> collect;
  for (const auto& t : f.terms) {
    ZVec e(a.size());
    for (size_t i = 0; i < a.size(); ++i) e[i] = dot_z(a[i], t.exp);
    auto it = collect.find(e);
    if (it == collect.end()) {
      Term nt;
      nt.exp = e;
      nt.val = t.val;
      nt.coeff = t.coeff;
      collect.emplace(e, std::make_pair(nt, 1));
    } else {
      it->second.first.val = std::min(it->second.first.val, t.val);
      it->second.first.coeff.reset();
      it->second.first.collision = true;
      it->second.second++;
    }
  }
  for (const auto& [e, tc] : collect) out.terms.push_back(tc.first);
  return out;
}

PlaneCurveImage project_curve(const TropicalComplex& curve, const ZMat& a) {
  if (a.size() != 2) fail(Err::DimMismatch, "project_curve: matrix must have two rows");
  {
    QMat aq;
    for (const auto& row : a) aq.push_back(to_q(row));
    if (rank_q(aq) != 2) fail(Err::DegenerateProjection, "project_curve: matrix rank below 2");
  }
  PlaneCurveImage img;
  for (size_t ci = 0; ci < curve.cells.size(); ++ci) {
    const TCCell& c = curve.cells[ci];
    if (c.dim == 0) continue;
    if (c.dim != 1) fail(Err::DimMismatch, "project_curve: complex is not a curve");
    ImagePiece pc;
    pc.source_cell = (int)ci;
    if (c.vertices.size() == 2 && c.rays.empty()) {
      QVec p = apply_matrix(a, curve.vertices[c.vertices[0]]);
      QVec q = apply_matrix(a, curve.vertices[c.vertices[1]]);
      QVec d = vec_sub(q, p);
      if (is_zero(d))
        fail(Err::DegenerateProjection, "project_curve: edge maps to a point");
      ZVec prim = primitive_q(d);
      pc.kind = PieceKind::Edge;
      pc.base = p;
      pc.dir = to_q(prim);
      pc.length = (pc.dir[0] != 0) ? d[0] / pc.dir[0] : d[1] / pc.dir[1];
    } else if (c.vertices.size() == 1 && c.rays.size() == 1) {
      QVec d = apply_matrix(a, to_q(c.rays[0]));
      if (is_zero(d)) fail(Err::DegenerateProjection, "project_curve: ray direction in kernel");
      pc.kind = PieceKind::Ray;
      pc.base = apply_matrix(a, curve.vertices[c.vertices[0]]);
      pc.dir = to_q(primitive_q(d));
      pc.length = 0;
    } else if (c.vertices.size() == 1 && c.rays.size() == 2 &&
               c.rays[0] == zvec_neg(c.rays[1])) {
      QVec d = apply_matrix(a, to_q(c.rays[0]));
      if (is_zero(d)) fail(Err::DegenerateProjection, "project_curve: line direction in kernel");
      pc.kind = PieceKind::Line;
      pc.base = apply_matrix(a, curve.vertices[c.vertices[0]]);
      pc.dir = to_q(primitive_q(d));
      pc.length = 0;
    } else {
      fail(Err::Internal, "project_curve: unexpected 1-cell shape");
    }
    img.pieces.push_back(pc);
  }
  return img;
}

std::vector<SelfIntersection> self_intersections(const TropicalComplex& curve,
                                                 const PlaneCurveImage& image) {
  const auto& pieces = image.pieces;
  auto adjacent = [&](int pi, int pj) {
    const auto& vi = curve.cells[pieces[pi].source_cell].vertices;
    const auto& vj = curve.cells[pieces[pj].source_cell].vertices;
    for (int v : vi)
      for (int w : vj)
        if (v == w) return true;
    return false;
  };

  // Non-generic configurations: a vertex image on a non-adjacent piece, or
  // two distinct vertices with the same image.
  std::vector<std::pair<int, QVec>> vertex_images;  // (cell id, image)
  for (size_t ci = 0; ci < curve.cells.size(); ++ci) {
    const TCCell& c = curve.cells[ci];
    if (c.dim != 0) continue;
    QVec w(2);
    // The vertex image is recoverable from any incident piece; recompute via
    // the first coordinate pair of the pieces' bases instead of storing A.
    // Simpler: vertex images are the piece bases; collect from pieces below.
    (void)w;
  }
  {
    std::map<int, QVec> vert_img;  // complex vertex id -> image
    for (const auto& pc : pieces) {
      const TCCell& c = curve.cells[pc.source_cell];
      if (pc.kind == PieceKind::Edge) {
        vert_img[c.vertices[0]] = pc.base;
        vert_img[c.vertices[1]] =
            vec_add(pc.base, vec_scale(pc.dir, pc.length));
      } else {
        vert_img[c.vertices[0]] = pc.base;
      }
    }
    std::map<QVec, std::vector<int>> by_point;
    for (const auto& [vid, pt] : vert_img) by_point[pt].push_back(vid);
    for (const auto& [pt, vids] : by_point)
      if (vids.size() > 1)
        fail(Err::OverlapDegenerate, "distinct vertices share an image point");
    for (const auto& [vid, pt] : vert_img) {
      for (size_t j = 0; j < pieces.size(); ++j) {
        const auto& cj = curve.cells[pieces[j].source_cell].vertices;
        if (std::find(cj.begin(), cj.end(), vid) != cj.end()) continue;
        QVec rel = vec_sub(pt, pieces[j].base);
        if (cross2(rel, pieces[j].dir) != 0) continue;
        Rat s = (pieces[j].dir[0] != 0) ? rel[0] / pieces[j].dir[0] : rel[1] / pieces[j].dir[1];
        if (param_in_relint(pieces[j], s))
          fail(Err::OverlapDegenerate, "vertex image lies on a non-adjacent piece");
      }
    }
  }

  std::map<QVec, SelfIntersection> found;
  for (size_t i = 0; i < pieces.size(); ++i) {
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      if (adjacent((int)i, (int)j)) continue;
      const ImagePiece& p1 = pieces[i];
      const ImagePiece& p2 = pieces[j];
      Rat det = cross2(p1.dir, p2.dir);
      QVec rhs = vec_sub(p2.base, p1.base);
      if (det == 0) {
        if (cross2(rhs, p1.dir) != 0) continue;  // parallel, distinct lines
        // Colinear: any open-interval overlap has positive length.
        int coord = (p1.dir[0] != 0) ? 0 : 1;
        Rat s0 = rhs[coord] / p1.dir[coord];
        Rat lam = p2.dir[coord] / p1.dir[coord];  // +-1
        // Range of piece 1 in its own parameter, open.
        auto range = [&](const ImagePiece& pc, Rat base, Rat scale,
                         Rat& lo, Rat& hi, bool& lo_inf, bool& hi_inf) {
          lo_inf = hi_inf = false;
          if (pc.kind == PieceKind::Line) { lo_inf = hi_inf = true; lo = hi = 0; return; }
          Rat a = base, b = base;
          if (pc.kind == PieceKind::Edge) b = base + scale * pc.length;
          else { if (scale > 0) { hi_inf = true; b = 0; } else { lo_inf = true; b = 0; } }
          if (pc.kind == PieceKind::Edge) { lo = std::min(a, b); hi = std::max(a, b); }
          else if (hi_inf) lo = a;
          else hi = a;
        };
        Rat lo1 = 0, hi1 = (p1.kind == PieceKind::Edge) ? p1.length : Rat(0);
        bool lo1_inf = (p1.kind == PieceKind::Line);
        bool hi1_inf = (p1.kind != PieceKind::Edge);
        Rat lo2, hi2;
        bool lo2_inf, hi2_inf;
        range(p2, s0, lam, lo2, hi2, lo2_inf, hi2_inf);
        Rat lo = 0, hi = 0;
        bool empty = false;
        bool lo_inf = lo1_inf && lo2_inf, hi_inf = hi1_inf && hi2_inf;
        if (!lo_inf) lo = lo1_inf ? lo2 : (lo2_inf ? lo1 : std::max(lo1, lo2));
        if (!hi_inf) hi = hi1_inf ? hi2 : (hi2_inf ? hi1 : std::min(hi1, hi2));
        if (!lo_inf && !hi_inf && lo >= hi) empty = true;
        if (!empty)
          fail(Err::OverlapDegenerate, "non-adjacent pieces overlap in a segment");
        continue;
      }
      Rat s = cross2(rhs, p2.dir) / det;
      Rat u = cross2(rhs, p1.dir) / det;
      if (!param_in_relint(p1, s) || !param_in_relint(p2, u)) continue;
      QVec pt = vec_add(p1.base, vec_scale(p1.dir, s));
      auto& sip = found[pt];
      sip.point = pt;
      sip.piece_pairs.push_back({(int)i, (int)j});
      sip.kinds.push_back({p1.kind, p2.kind});
    }
  }
  std::vector<SelfIntersection> out;
  for (auto& [pt, sip] : found) out.push_back(sip);
  return out;
}

PlaneCurveImage project_and_intersect(const TropicalComplex& curve, const ZMat& a) {
  PlaneCurveImage img = project_curve(curve, a);
  img.sips = self_intersections(curve, img);
  return img;
}

namespace {

struct Node {
  QVec pt;
  std::vector<int> source_cells;  // curve cells owning the node
  bool is_sip = false;
};

struct Arc {
  int u, v;  // node ids; v == -1 for the unbounded tail of a ray/line
  QVec dir;  // primitive direction from u toward v (or toward infinity)
  int piece;
};

}  // namespace

PlaneCurveImage image_dual_subdivision(const IntersectionReport& report, const ZMat& a,
                                       const ValuedPolynomial* pushforward) {
  int n = report.n;
  if (report.k != n - 1)
    fail(Err::Unsupported, "image_dual_subdivision: input is not a curve intersection");
  if (!report.proper) fail(Err::NotProper, "image_dual_subdivision: intersection not proper");
  TransversalityCertificate cert = is_transversal(report);
  if (!cert.ok)
    fail(Err::Unsupported, "image_dual_subdivision: intersection not transversal");
  if (n - 2 != 1)
    fail(Err::Unsupported,
         "image_dual_subdivision: native assembly needs a one-dimensional kernel");

  ZMat kernel = kernel_basis(a);
  LinearFunctional psi = make_functional(kernel[0]);
  const TropicalComplex& curve = report.complex;

  PlaneCurveImage img = project_and_intersect(curve, a);

  // Node set: images of curve vertices, then self-intersection points.
  std::vector<Node> nodes;
  std::map<QVec, int> node_at;
  std::map<int, int> node_of_vertex;  // complex vertex id -> node id
  for (size_t ci = 0; ci < curve.cells.size(); ++ci) {
    const TCCell& c = curve.cells[ci];
    if (c.dim != 0) continue;
    QVec pt = apply_matrix(a, curve.vertices[c.vertices[0]]);
    if (node_at.count(pt)) fail(Err::OverlapDegenerate, "coincident vertex images");
    Node nd;
    nd.pt = pt;
    nd.source_cells = {(int)ci};
    node_at[pt] = (int)nodes.size();
    node_of_vertex[c.vertices[0]] = (int)nodes.size();
    nodes.push_back(nd);
  }
  for (const auto& sip : img.sips) {
    if (node_at.count(sip.point)) fail(Err::OverlapDegenerate, "self-intersection on a vertex");
    Node nd;
    nd.pt = sip.point;
    nd.is_sip = true;
    std::set<int> cells;
    for (const auto& [i, j] : sip.piece_pairs) {
      cells.insert(img.pieces[i].source_cell);
      cells.insert(img.pieces[j].source_cell);
    }
    nd.source_cells.assign(cells.begin(), cells.end());
    node_at[sip.point] = (int)nodes.size();
    nodes.push_back(nd);
  }

  // Split pieces at the self-intersection points lying on them.
  std::vector<Arc> arcs;
  for (size_t pi = 0; pi < img.pieces.size(); ++pi) {
    const ImagePiece& pc = img.pieces[pi];
    if (pc.kind == PieceKind::Line)
      fail(Err::Unsupported, "image_dual_subdivision: line pieces unsupported");
    std::vector<std::pair<Rat, int>> stops;  // (parameter, node)
    for (const auto& sip : img.sips) {
      bool involved = false;
      for (const auto& [i, j] : sip.piece_pairs)
        if (i == (int)pi || j == (int)pi) involved = true;
      if (!involved) continue;
      QVec rel = vec_sub(sip.point, pc.base);
      Rat s = (pc.dir[0] != 0) ? rel[0] / pc.dir[0] : rel[1] / pc.dir[1];
      stops.push_back({s, node_at.at(sip.point)});
    }
    std::sort(stops.begin(), stops.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    const TCCell& c = curve.cells[pc.source_cell];
    int base_node = node_of_vertex.at(c.vertices[0]);
    std::vector<std::pair<Rat, int>> chain;
    chain.push_back({Rat(0), base_node});
    for (const auto& st : stops) chain.push_back(st);
    if (pc.kind == PieceKind::Edge) {
      // The cell vertex whose image is base may be either endpoint; fix order.
      QVec img0 = apply_matrix(a, curve.vertices[c.vertices[0]]);
      int end_vertex = (img0 == pc.base) ? c.vertices[1] : c.vertices[0];
      int start_vertex = (img0 == pc.base) ? c.vertices[0] : c.vertices[1];
      chain[0].second = node_of_vertex.at(start_vertex);
      chain.push_back({pc.length, node_of_vertex.at(end_vertex)});
      for (size_t s = 0; s + 1 < chain.size(); ++s)
        arcs.push_back({chain[s].second, chain[s + 1].second, pc.dir, (int)pi});
    } else {
      for (size_t s = 0; s + 1 < chain.size(); ++s)
        arcs.push_back({chain[s].second, chain[s + 1].second, pc.dir, (int)pi});
      arcs.push_back({chain.back().second, -1, pc.dir, (int)pi});
    }
  }

  // Raw dual cells: mixed fiber polytopes of the decomposition summands,
  // mapped to the plane.
  std::map<int, int> cell_index_of;  // complex cell id -> index into report.decomposition
  for (size_t i = 0; i < curve.cells.size(); ++i) cell_index_of[(int)i] = (int)i;
  auto summand_polytopes = [&](int cell_id) {
    const CellDecomposition& d = report.decomposition[cell_index_of.at(cell_id)];
    std::vector<Polytope> ps;
    for (int f = 0; f < report.k; ++f)
      ps.push_back(report.factors[f].dual->face_polytope(d.summand_faces[f]));
    return ps;
  };
  std::vector<Polytope> raw(nodes.size());
  std::vector<int> pval(nodes.size(), 1);
  for (size_t ni = 0; ni < nodes.size(); ++ni) {
    const Node& nd = nodes[ni];
    Polytope acc;
    bool first = true;
    for (int cid : nd.source_cells) {
      Polytope part =
          apply_matrix_polytope(a, mixed_fiber_polytope(summand_polytopes(cid), psi).polytope);
      acc = first ? part : minkowski_sum(acc, part);
      first = false;
    }
    raw[ni] = acc;
    pval[ni] = (int)nd.source_cells.size();
  }

  // Breadth-first placement, certified on every arc.
  std::vector<std::vector<int>> arcs_at(nodes.size());
  for (size_t ai = 0; ai < arcs.size(); ++ai) {
    arcs_at[arcs[ai].u].push_back((int)ai);
    if (arcs[ai].v >= 0) arcs_at[arcs[ai].v].push_back((int)ai);
  }
  std::vector<Polytope> placed(nodes.size());
  std::vector<char> done(nodes.size(), 0);
  int start = 0;
  for (size_t i = 1; i < nodes.size(); ++i)
    if (lex_less(nodes[i].pt, nodes[start].pt)) start = (int)i;
  placed[start] = raw[start];
  done[start] = 1;
  std::queue<int> bfs;
  bfs.push(start);
  auto shared_face = [&](const Polytope& cell, const QVec& dir, bool toward) {
    QVec w = toward ? vec_scale(dir, Rat(-1)) : dir;
    return face_in_direction(cell, w);
  };
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (int ai : arcs_at[u]) {
      const Arc& arc = arcs[ai];
      int other = (arc.u == u) ? arc.v : arc.u;
      if (other < 0) continue;
      // Face of the cell at `u` toward the arc, and of `other` back along it.
      bool u_is_tail = (arc.u == u);
      Polytope fu = shared_face(placed[u], arc.dir, u_is_tail);
      Polytope fo_raw = shared_face(done[other] ? placed[other] : raw[other], arc.dir, !u_is_tail);
      if (fu.vertices.size() != fo_raw.vertices.size() || fu.dim != 1 || fo_raw.dim != 1)
        fail(Err::Internal, "dual subdivision: wall mismatch");
      QVec t = vec_sub(fu.vertices[0], fo_raw.vertices[0]);
      for (size_t i = 0; i < fu.vertices.size(); ++i)
        if (!(vec_sub(fu.vertices[i], fo_raw.vertices[i]) == t))
          fail(Err::Internal, "dual subdivision: wall is not a translate");
      if (!done[other]) {
        placed[other] = translate(raw[other], t);
        done[other] = 1;
        bfs.push(other);
      } else if (!is_zero(t)) {
        fail(Err::Internal, "dual subdivision: inconsistent cycle closure");
      }
    }
  }
  for (char d : done)
    if (!d) fail(Err::Unsupported, "image_dual_subdivision: image complex is disconnected");

  ImageDualSubdivision ds;
  for (size_t ni = 0; ni < nodes.size(); ++ni) {
    DualCell dc;
    dc.poly = placed[ni];
    dc.p = pval[ni];
    dc.source_faces = nodes[ni].source_cells;
    ds.cells.push_back(dc);
  }
  std::set<QMat> edge_seen;
  for (const auto& arc : arcs) {
    Polytope e = shared_face(placed[arc.u], arc.dir, true);
    if (e.dim != 1) fail(Err::Internal, "dual subdivision: edge is not a segment");
    if (edge_seen.insert(e.vertices).second) ds.edges.push_back({e, arc.piece});
  }

  QMat all_pts;
  for (const auto& dc : ds.cells)
    for (const auto& v : dc.poly.vertices) all_pts.push_back(v);
  ds.hull = convex_hull(all_pts);
  Rat total = 0;
  for (const auto& dc : ds.cells) total += polygon_area(dc.poly);
  if (total != polygon_area(ds.hull))
    fail(Err::Internal, "dual subdivision: cells do not tile the hull");

  QVec shift(2, Rat(0));
  if (pushforward) {
    RegularSubdivision ps =
        lower_hull_subdivision(pushforward->support(), pushforward->valuations());
    Polytope hull_push = convex_hull_z(pushforward->support());
    if (hull_push.vertices.size() != ds.hull.vertices.size())
      fail(Err::Internal, "dual subdivision: hull does not match the pushforward polytope");
    shift = vec_sub(hull_push.vertices[0], ds.hull.vertices[0]);
    for (size_t i = 0; i < hull_push.vertices.size(); ++i)
      if (!(vec_sub(hull_push.vertices[i], ds.hull.vertices[i]) == shift))
        fail(Err::Internal, "dual subdivision: hull is not a translate of the pushforward polytope");
    // Cell-for-cell verification against the pushforward subdivision.
    std::vector<Polytope> expect;
    for (int mid : ps.maximal_faces) expect.push_back(ps.face_polytope(mid));
    if (expect.size() != ds.cells.size())
      fail(Err::Internal, "dual subdivision: cell count differs from the pushforward subdivision");
    for (const auto& dc : ds.cells) {
      Polytope moved = translate(dc.poly, shift);
      bool hit = false;
      for (const auto& e : expect)
        if (e == moved) { hit = true; break; }
      if (!hit) fail(Err::Internal, "dual subdivision: cell missing from the pushforward subdivision");
    }
    ds.anchored_to_pushforward = true;
  } else {
    shift = vec_scale(ds.hull.vertices[0], Rat(-1));
  }
  for (auto& dc : ds.cells) dc.poly = translate(dc.poly, shift);
  for (auto& e : ds.edges) e.poly = translate(e.poly, shift);
  ds.hull = translate(ds.hull, shift);

  img.dual_subdivision = std::move(ds);
  return img;
}

}  // namespace trop
