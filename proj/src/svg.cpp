#include "tropicast/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace trop {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 60.0;

struct Viewport {
  double minx = 0, miny = 0, maxx = 1, maxy = 1;
  bool any = false;

  void add(const QVec& p) {
    double x = mpq_get_d(p[0].get_mpq_t());
    double y = mpq_get_d(p[1].get_mpq_t());
    if (!any) {
      minx = maxx = x;
      miny = maxy = y;
      any = true;
    } else {
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
    }
  }
  double scale() const {
    double w = std::max(maxx - minx, 1e-9), h = std::max(maxy - miny, 1e-9);
    return (kCanvas - 2 * kMargin) / std::max(w, h);
  }
  double tx(const Rat& x) const { return kMargin + (mpq_get_d(x.get_mpq_t()) - minx) * scale(); }
  double ty(const Rat& y) const { return kCanvas - kMargin - (mpq_get_d(y.get_mpq_t()) - miny) * scale(); }
};

void open_svg(std::ostringstream& os) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)kCanvas
     << "\" height=\"" << (int)kCanvas << "\" viewBox=\"0 0 " << (int)kCanvas << " "
     << (int)kCanvas << "\">\n";
}

void line_to(std::ostringstream& os, const Viewport& vp, const QVec& a, const QVec& b,
             const char* style) {
  os << "  <line x1=\"" << vp.tx(a[0]) << "\" y1=\"" << vp.ty(a[1]) << "\" x2=\""
     << vp.tx(b[0]) << "\" y2=\"" << vp.ty(b[1]) << "\" style=\"" << style << "\"/>\n";
}

// Clip length for rays: far enough to exit the viewport.
QVec ray_end(const Viewport& vp, const QVec& base, const QVec& dir) {
  double spanx = vp.maxx - vp.minx + 1, spany = vp.maxy - vp.miny + 1;
  double d = std::max({spanx, spany, 1.0}) * 2;
  double dx = mpq_get_d(dir[0].get_mpq_t()), dy = mpq_get_d(dir[1].get_mpq_t());
  double norm = std::max(std::abs(dx), std::abs(dy));
  long steps = (long)(d / std::max(norm, 1e-9) * std::max(norm, 1.0)) + 2;
  Rat t((long)(d + steps));
  return vec_add(base, vec_scale(dir, t));
}

}  // namespace

std::string svg_plane_curve(const PlaneCurveImage& img) {
  Viewport vp;
  for (const auto& pc : img.pieces) {
    vp.add(pc.base);
    if (pc.kind == PieceKind::Edge)
      vp.add(vec_add(pc.base, vec_scale(pc.dir, pc.length)));
  }
  for (const auto& sip : img.sips) vp.add(sip.point);

  std::ostringstream os;
  open_svg(os);
  if (vp.any) {
    const char* edge_style = "stroke:#205090;stroke-width:2";
    const char* ray_style = "stroke:#208050;stroke-width:2";
    for (const auto& pc : img.pieces) {
      if (pc.kind == PieceKind::Edge) {
        line_to(os, vp, pc.base, vec_add(pc.base, vec_scale(pc.dir, pc.length)), edge_style);
      } else if (pc.kind == PieceKind::Ray) {
        line_to(os, vp, pc.base, ray_end(vp, pc.base, pc.dir), ray_style);
      } else {
        line_to(os, vp, ray_end(vp, pc.base, vec_scale(pc.dir, Rat(-1))),
                ray_end(vp, pc.base, pc.dir), ray_style);
      }
    }
    for (const auto& sip : img.sips) {
      os << "  <circle cx=\"" << vp.tx(sip.point[0]) << "\" cy=\"" << vp.ty(sip.point[1])
         << "\" r=\"5\" style=\"fill:#c03030\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

namespace {

void draw_polygon(std::ostringstream& os, const Viewport& vp, QMat pts, const char* style) {
  // Order convex polygon vertices around their centroid.
  QVec c(2, Rat(0));
  for (const auto& p : pts) c = vec_add(c, p);
  c = vec_scale(c, frac(1, (long)pts.size()));
  auto half = [&](const QVec& q) { return (q[1] > 0 || (q[1] == 0 && q[0] > 0)) ? 0 : 1; };
  std::sort(pts.begin(), pts.end(), [&](const QVec& a, const QVec& b) {
    QVec qa = vec_sub(a, c), qb = vec_sub(b, c);
    int ha = half(qa), hb = half(qb);
    if (ha != hb) return ha < hb;
    return qa[0] * qb[1] - qa[1] * qb[0] > 0;
  });
  os << "  <polygon points=\"";
  for (const auto& p : pts) os << vp.tx(p[0]) << "," << vp.ty(p[1]) << " ";
  os << "\" style=\"" << style << "\"/>\n";
}

}  // namespace

std::string svg_subdivision(const RegularSubdivision& sub) {
  if (sub.ambient_dim != 2) fail(Err::NotPlanar, "svg: subdivision is not planar");
  Viewport vp;
  for (const auto& p : sub.points) vp.add(to_q(p));
  std::ostringstream os;
  open_svg(os);
  if (vp.any) {
    for (int mid : sub.maximal_faces) {
      QMat pts;
      for (int i : sub.faces[mid].pts) pts.push_back(to_q(sub.points[i]));
      Polytope cell = convex_hull(pts);
      draw_polygon(os, vp, cell.vertices,
                   "fill:#e8f0fa;stroke:#205090;stroke-width:1.5");
    }
    for (const auto& p : sub.points) {
      QVec q = to_q(p);
      os << "  <circle cx=\"" << vp.tx(q[0]) << "\" cy=\"" << vp.ty(q[1])
         << "\" r=\"3\" style=\"fill:#303030\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_dual_subdivision(const ImageDualSubdivision& ds) {
  Viewport vp;
  for (const auto& c : ds.cells)
    for (const auto& v : c.poly.vertices) vp.add(v);
  for (const auto& v : ds.hull.vertices) vp.add(v);
  std::ostringstream os;
  open_svg(os);
  if (vp.any) {
    for (const auto& c : ds.cells) {
      const char* style = c.p >= 2 ? "fill:#fae8e8;stroke:#903020;stroke-width:1.5"
                                   : "fill:#e8f0fa;stroke:#205090;stroke-width:1.5";
      draw_polygon(os, vp, c.poly.vertices, style);
    }
    for (const auto& c : ds.cells) {
      QVec ctr(2, Rat(0));
      for (const auto& v : c.poly.vertices) ctr = vec_add(ctr, v);
      ctr = vec_scale(ctr, frac(1, (long)c.poly.vertices.size()));
      os << "  <text x=\"" << vp.tx(ctr[0]) << "\" y=\"" << vp.ty(ctr[1])
         << "\" font-size=\"16\" text-anchor=\"middle\">p=" << c.p << "</text>\n";
    }
    for (const auto& e : ds.edges)
      if (e.poly.vertices.size() == 2)
        line_to(os, vp, e.poly.vertices[0], e.poly.vertices[1],
                "stroke:#606060;stroke-width:1");
  }
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) fail(Err::Internal, "cannot write " + path);
  f << content;
}

}  // namespace trop
