#include "tropicast/tropical_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropicast/lp.hpp"

namespace trop {

QMat TropicalComplex::cell_points(const TCCell& c) const {
  QMat out;
  for (int v : c.vertices) out.push_back(vertices[v]);
  return out;
}

TropicalComplex dual_complex(const std::shared_ptr<RegularSubdivision>& sub,
                             const std::vector<char>& keep) {
  const RegularSubdivision& s = *sub;
  size_t n = s.ambient_dim;
  TropicalComplex x;
  x.ambient_dim = (int)n;
  x.dual = sub;

  // Canonical dual point of each maximal cell: the RREF particular solution
  // of the equal-value system lift(a) + w.a = lift(a0) + w.a0 over the cell.
  std::map<int, QVec> cell_point;
  for (int cid : s.maximal_faces) {
    const SubFace& c = s.faces[cid];
    QMat a;
    QVec b;
    int p0 = c.pts[0];
    for (size_t i = 1; i < c.pts.size(); ++i) {
      int pi = c.pts[i];
      a.push_back(to_q(zvec_sub(s.points[pi], s.points[p0])));
      b.push_back(s.lifts[p0] - s.lifts[pi]);
    }
    if (a.empty()) {
      cell_point[cid] = QVec(n, Rat(0));
      continue;
    }
    auto w = solve_linear(a, b);
    if (!w) fail(Err::Internal, "dual_complex: inconsistent cell system");
    cell_point[cid] = *w;
  }

  std::map<QVec, int> vertex_ids;
  auto vertex_id = [&](const QVec& v) {
    auto it = vertex_ids.find(v);
    if (it != vertex_ids.end()) return it->second;
    int id = (int)x.vertices.size();
    x.vertices.push_back(v);
    vertex_ids.emplace(v, id);
    return id;
  };

  for (size_t fid = 0; fid < s.faces.size(); ++fid) {
    if (!keep[fid]) continue;
    const SubFace& e = s.faces[fid];
    TCCell cell;
    cell.dual_face = (int)fid;
    std::set<int> vids;
    for (int cid : e.maximal_cells) vids.insert(vertex_id(cell_point.at(cid)));
    cell.vertices.assign(vids.begin(), vids.end());

    // Recession cone: directions keeping the argmin on (at least) this face.
    ZMat eqs, ineqs;
    int e0 = e.pts[0];
    std::set<int> in_e(e.pts.begin(), e.pts.end());
    for (size_t i = 1; i < e.pts.size(); ++i)
      eqs.push_back(zvec_sub(s.points[e.pts[i]], s.points[e0]));
    for (size_t b = 0; b < s.points.size(); ++b)
      if (!in_e.count((int)b)) ineqs.push_back(zvec_sub(s.points[b], s.points[e0]));
    if (eqs.empty()) {
      ZVec zero(n, Int(0));
      eqs.push_back(zero);  // harmless full-space equality row
    }
    ConeRays rec = ineqs.empty() ? ConeRays{{}, nullspace_z(eqs)}
                                 : extreme_rays_of_cone(eqs, ineqs);
    for (const auto& r : rec.rays) cell.rays.push_back(r);
    for (const auto& l : rec.lineality) {
      cell.rays.push_back(l);
      cell.rays.push_back(zvec_neg(l));
    }
    std::sort(cell.rays.begin(), cell.rays.end(), lex_less_z);

    QMat span;
    const QVec& v0 = x.vertices[cell.vertices[0]];
    for (size_t i = 1; i < cell.vertices.size(); ++i)
      span.push_back(vec_sub(x.vertices[cell.vertices[i]], v0));
    for (const auto& r : cell.rays) span.push_back(to_q(r));
    cell.dim = span.empty() ? 0 : rank_q(span);
    if (cell.dim != (int)n - e.dim)
      fail(Err::Internal, "dual_complex: duality dimension mismatch");

    if (e.dim == 1) {
      ZMat pts;
      for (int p : e.pts) pts.push_back(s.points[p]);
      std::sort(pts.begin(), pts.end(), lex_less_z);
      cell.weight = lattice_length(pts.front(), pts.back());
    }
    x.cells.push_back(cell);
  }

  std::sort(x.cells.begin(), x.cells.end(), [](const TCCell& a, const TCCell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    return a.rays < b.rays;
  });
  return x;
}

TropicalComplex hypersurface(const ValuedPolynomial& f) {
  if (f.terms.size() < 2)
    fail(Err::EmptyHypersurface, "hypersurface of a single term is empty");
  auto sub = std::make_shared<RegularSubdivision>(
      lower_hull_subdivision(f.support(), f.valuations()));
  std::vector<char> keep(sub->faces.size(), 0);
  for (size_t i = 0; i < sub->faces.size(); ++i) keep[i] = sub->faces[i].dim >= 1;
  TropicalComplex x = dual_complex(sub, keep);
  x.poly = std::make_shared<ValuedPolynomial>(f);
  x.pure_dim = f.n_vars - 1;
  return x;
}

bool cell_contains(const TropicalComplex& x, const TCCell& c, const QVec& p) {
  QMat rays;
  for (const auto& r : c.rays) rays.push_back(to_q(r));
  return in_polyhedron_vrep(x.cell_points(c), rays, p);
}

bool on_complex(const TropicalComplex& x, const QVec& p) {
  for (const auto& c : x.cells)
    if (cell_contains(x, c, p)) return true;
  return false;
}

TropicalComplex local_cone(const TropicalComplex& x, const QVec& p) {
  std::vector<const TCCell*> containing;
  for (const auto& c : x.cells)
    if (cell_contains(x, c, p)) containing.push_back(&c);
  if (containing.empty()) fail(Err::PointNotOnComplex, "local_cone: point not on complex");

  TropicalComplex fan;
  fan.ambient_dim = x.ambient_dim;
  fan.vertices.push_back(QVec(x.ambient_dim, Rat(0)));
  std::set<std::pair<std::vector<int>, ZMat>> seen;
  for (const TCCell* c : containing) {
    QMat gens;
    for (int v : c->vertices) {
      QVec d = vec_sub(x.vertices[v], p);
      if (!is_zero(d)) gens.push_back(d);
    }
    for (const auto& r : c->rays) gens.push_back(to_q(r));
    TCCell cone;
    cone.vertices = {0};
    if (!gens.empty()) {
      ConeRays cr = cone_from_generators(gens);
      for (const auto& r : cr.rays) cone.rays.push_back(r);
      for (const auto& l : cr.lineality) {
        cone.rays.push_back(l);
        cone.rays.push_back(zvec_neg(l));
      }
      std::sort(cone.rays.begin(), cone.rays.end(), lex_less_z);
    }
    QMat span;
    for (const auto& r : cone.rays) span.push_back(to_q(r));
    cone.dim = span.empty() ? 0 : rank_q(span);
    if (cone.dim == 0 && containing.size() > 1) continue;
    if (seen.insert({cone.vertices, cone.rays}).second) fan.cells.push_back(cone);
  }
  std::sort(fan.cells.begin(), fan.cells.end(), [](const TCCell& a, const TCCell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.rays < b.rays;
  });
  return fan;
}

}  // namespace trop
