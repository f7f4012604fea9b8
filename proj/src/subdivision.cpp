#include "tropicast/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trop {

namespace {

struct ConfigFace {
  std::vector<int> pts;  // local indices, sorted
  int dim;
  QVec expose;  // reduced-coords direction exposing the face as argmax
};

// Faces of a full-dimensional point configuration, as point sets (every
// configuration point on the face, extreme or not).
std::vector<ConfigFace> config_faces(const QMat& coords) {
  size_t np = coords.size();
  size_t d = coords[0].size();
  std::vector<int> all(np);
  for (size_t i = 0; i < np; ++i) all[i] = (int)i;

  std::vector<ConfigFace> out;
  if (d == 0) {
    out.push_back({all, 0, QVec{}});
    return out;
  }
  HullData h = hull_full_dim(coords);
  std::set<std::vector<int>> seen;
  seen.insert(all);
  std::vector<std::vector<int>> frontier;
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
        std::set<int> fs(facet.pts.begin(), facet.pts.end());
        std::vector<int> inter;
        for (int v : f)
          if (fs.count(v)) inter.push_back(v);
        if (inter.empty() || inter == f) continue;
        if (seen.insert(inter).second) next.push_back(inter);
      }
    }
    faces.insert(faces.end(), next.begin(), next.end());
    frontier = next;
  }
  out.push_back({all, (int)d, QVec(d, Rat(0))});
  for (const auto& fpts : faces) {
    ConfigFace cf;
    cf.pts = fpts;
    QMat member;
    for (int v : fpts) member.push_back(coords[v]);
    cf.dim = affine_rank(member);
    cf.expose = QVec(d, Rat(0));
    for (const auto& facet : h.facets) {
      bool contains = true;
      for (int v : fpts)
        if (dot_zq(facet.normal, coords[v]) != facet.offset) { contains = false; break; }
      if (contains) cf.expose = vec_add(cf.expose, to_q(facet.normal));
    }
    out.push_back(cf);
  }
  return out;
}

}  // namespace

Polytope RegularSubdivision::face_polytope(int face_id) const {
  ZMat pts;
  for (int i : faces[face_id].pts) pts.push_back(points[i]);
  return convex_hull_z(pts);
}

int RegularSubdivision::find_face(const std::vector<int>& pts) const {
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].pts == pts) return (int)i;
  return -1;
}

std::vector<int> argmin_face(const ZMat& support, const QVec& lifts, const QVec& w) {
  std::vector<int> out;
  Rat best;
  bool first = true;
  for (size_t i = 0; i < support.size(); ++i) {
    Rat val = lifts[i] + dot_zq(support[i], w);
    if (first || val < best) {
      best = val;
      out.clear();
      first = false;
    }
    if (val == best) out.push_back((int)i);
  }
  return out;
}

RegularSubdivision lower_hull_subdivision(const ZMat& support, const QVec& lifts) {
  size_t np = support.size();
  if (np == 0) fail(Err::EmptyInput, "lower_hull_subdivision of empty support");
  if (lifts.size() != np) fail(Err::DimMismatch, "support/lift size mismatch");
  size_t n = support[0].size();
  {
    ZMat sorted = support;
    std::sort(sorted.begin(), sorted.end(), lex_less_z);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Err::Internal, "duplicate support points");
  }

  RegularSubdivision sub;
  sub.ambient_dim = (int)n;
  sub.points = support;
  sub.lifts = lifts;

  if (np == 1) {
    sub.flat = true;
    sub.faces.push_back({{0}, 0, QVec(n, Rat(0)), {0}, true});
    sub.maximal_faces = {0};
    return sub;
  }

  // Lattice-preserving reduction to full-dimensional coordinates.
  ZMat diffs;
  for (size_t i = 1; i < np; ++i) diffs.push_back(zvec_sub(support[i], support[0]));
  ZMat lat = generated_lattice_basis(diffs);
  size_t d = lat.size();
  QMat latq;
  for (const auto& row : lat) latq.push_back(to_q(row));
  QMat coords;
  for (size_t i = 0; i < np; ++i) {
    auto c = coords_in_basis(latq, to_q(zvec_sub(support[i], support[0])));
    if (!c) fail(Err::Internal, "subdivision: reduction failed");
    coords.push_back(*c);
  }

  QMat lifted;
  for (size_t i = 0; i < np; ++i) {
    QVec p = coords[i];
    p.push_back(lifts[i]);
    lifted.push_back(p);
  }

  struct CellInfo {
    std::vector<int> pts;
    QVec expose;  // ambient, argmin == pts
  };
  std::vector<CellInfo> cells;

  if (affine_rank(lifted) == (int)d) {
    // Lift is affine on the support: the trivial subdivision.
    // Fit lift(a_i) = kappa + v . c_i and expose with the matching -v.
    QMat a(np, QVec(d + 1));
    QVec b(np);
    for (size_t i = 0; i < np; ++i) {
      a[i][0] = 1;
      for (size_t j = 0; j < d; ++j) a[i][j + 1] = coords[i][j];
      b[i] = lifts[i];
    }
    auto sol = solve_linear(a, b);
    if (!sol) fail(Err::Internal, "flat subdivision: affine fit failed");
    QVec v((*sol).begin() + 1, (*sol).end());
    QVec minus_v(d);
    for (size_t j = 0; j < d; ++j) minus_v[j] = -v[j];
    CellInfo ci;
    ci.pts.resize(np);
    for (size_t i = 0; i < np; ++i) ci.pts[i] = (int)i;
    ci.expose = lift_functional(latq, minus_v);
    cells.push_back(ci);
    sub.flat = true;
  } else {
    HullData h = hull_full_dim(lifted);
    for (const auto& f : h.facets) {
      if (f.normal[d] >= 0) continue;  // keep facets with downward normal
      Rat mu = Rat(-f.normal[d]);
      QVec wred(d);
      for (size_t j = 0; j < d; ++j) wred[j] = Rat(-f.normal[j]) / mu;
      CellInfo ci;
      ci.pts = f.pts;
      std::sort(ci.pts.begin(), ci.pts.end());
      ci.expose = lift_functional(latq, wred);
      cells.push_back(ci);
    }
    std::sort(cells.begin(), cells.end(),
              [](const CellInfo& a, const CellInfo& b) { return a.pts < b.pts; });
  }

  // Enumerate faces of every cell, deduplicate, and attach exposing
  // directions: the cell's direction plus an exact small step toward the face.
  std::map<std::vector<int>, int> face_ids;
  for (const auto& ci : cells) {
    QMat cell_coords;
    for (int i : ci.pts) cell_coords.push_back(coords[i]);
    // Base values under the cell exposure.
    Rat base = lifts[ci.pts[0]] + dot_zq(support[ci.pts[0]], ci.expose);
    for (const auto& cf : config_faces(cell_coords)) {
      std::vector<int> global;
      for (int l : cf.pts) global.push_back(ci.pts[l]);
      std::sort(global.begin(), global.end());
      if (face_ids.count(global)) continue;
      QVec expose = ci.expose;
      if (!is_zero(cf.expose)) {
        QVec m = lift_functional(latq, vec_scale(cf.expose, Rat(-1)));
        Rat slope_face = dot(m, to_q(support[global[0]]));
        Rat eps = 1;
        bool bounded = false;
        std::set<int> in_cell(ci.pts.begin(), ci.pts.end());
        for (size_t b = 0; b < np; ++b) {
          if (in_cell.count((int)b)) continue;
          Rat gap = lifts[b] + dot_zq(support[b], ci.expose) - base;
          Rat slope = dot(m, to_q(support[b]));
          if (slope < slope_face) {
            Rat bound = gap / (slope_face - slope);
            if (!bounded || bound < eps) { eps = bound; bounded = true; }
          }
        }
        if (bounded) eps /= 2;
        expose = vec_add(ci.expose, vec_scale(m, eps));
      }
      SubFace sf;
      sf.pts = global;
      sf.dim = cf.dim;
      sf.expose = expose;
      face_ids[global] = (int)sub.faces.size();
      sub.faces.push_back(sf);
    }
  }

  // Containment in maximal cells; record the maximal faces.
  std::vector<std::set<int>> cell_sets;
  for (const auto& ci : cells) cell_sets.emplace_back(ci.pts.begin(), ci.pts.end());
  std::vector<int> cell_face_id(cells.size());
  for (size_t c = 0; c < cells.size(); ++c) cell_face_id[c] = face_ids[cells[c].pts];
  for (auto& [pts, id] : face_ids) {
    for (size_t c = 0; c < cells.size(); ++c) {
      bool inside = true;
      for (int p : pts)
        if (!cell_sets[c].count(p)) { inside = false; break; }
      if (inside) sub.faces[id].maximal_cells.push_back(cell_face_id[c]);
    }
  }
  for (size_t c = 0; c < cells.size(); ++c) {
    sub.faces[cell_face_id[c]].maximal = true;
    sub.maximal_faces.push_back(cell_face_id[c]);
  }
  std::sort(sub.maximal_faces.begin(), sub.maximal_faces.end());

  // Sanity: the recorded exposure reproduces each face as an argmin set.
  for (const auto& sf : sub.faces) {
    if (argmin_face(support, lifts, sf.expose) != sf.pts)
      fail(Err::Internal, "subdivision: exposing direction failed");
  }
  return sub;
}

}  // namespace trop
