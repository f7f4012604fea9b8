#include "tropicast/json_io.hpp"

#include <sstream>

namespace trop {

const char* kSchema = "tropicast/1";

Json rat_to_json(const Rat& q) { return rat_str(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat((long)j.get<long long>());
  return parse_rat(j.get<std::string>());
}

Json qvec_to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rat_to_json(x));
  return out;
}

QVec qvec_from_json(const Json& j) {
  QVec out;
  for (const auto& x : j) out.push_back(rat_from_json(x));
  return out;
}

Json zvec_to_json(const ZVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

ZVec zvec_from_json(const Json& j) {
  ZVec out;
  for (const auto& x : j) {
    if (x.is_number_integer()) out.push_back(Int((long)x.get<long long>()));
    else out.push_back(Int(x.get<std::string>()));
  }
  return out;
}

Json zmat_to_json(const ZMat& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(zvec_to_json(row));
  return out;
}

ZMat zmat_from_json(const Json& j) {
  ZMat out;
  for (const auto& row : j) out.push_back(zvec_from_json(row));
  return out;
}

Json polytope_to_json(const Polytope& p) {
  Json out;
  out["schema"] = kSchema;
  out["type"] = "polytope";
  out["ambient_dim"] = p.ambient_dim;
  out["dim"] = p.dim;
  Json verts = Json::array();
  for (const auto& v : p.vertices) verts.push_back(qvec_to_json(v));
  out["vertices"] = verts;
  return out;
}

Polytope polytope_from_json(const Json& j) {
  QMat pts;
  for (const auto& v : j.at("vertices")) pts.push_back(qvec_from_json(v));
  Polytope p = convex_hull(pts);
  if (j.contains("ambient_dim") && (int)j["ambient_dim"] != p.ambient_dim)
    fail(Err::DimMismatch, "polytope json: ambient_dim mismatch");
  return p;
}

Json valued_poly_to_json(const ValuedPolynomial& f) {
  Json out;
  out["schema"] = kSchema;
  out["type"] = "valued_polynomial";
  out["n_vars"] = f.n_vars;
  if (f.prime) out["prime"] = *f.prime;
  Json terms = Json::array();
  for (const auto& t : f.terms) {
    Json jt;
    jt["exp"] = zvec_to_json(t.exp);
    if (t.coeff) jt["coeff"] = rat_to_json(*t.coeff);
    else jt["val"] = rat_to_json(t.val);
    if (t.collision) jt["collision"] = true;
    terms.push_back(jt);
  }
  out["terms"] = terms;
  return out;
}

ValuedPolynomial valued_poly_from_json(const Json& j) {
  int n = j.at("n_vars");
  std::optional<long> prime;
  if (j.contains("prime")) prime = (long)j["prime"];
  std::vector<std::pair<ZVec, Rat>> coeff_terms;
  std::vector<std::pair<ZVec, Rat>> val_terms;
  for (const auto& jt : j.at("terms")) {
    ZVec e = zvec_from_json(jt.at("exp"));
    if ((int)e.size() != n) fail(Err::DimMismatch, "valued polynomial json: exponent arity");
    if (jt.contains("coeff")) coeff_terms.push_back({e, rat_from_json(jt["coeff"])});
    else val_terms.push_back({e, rat_from_json(jt.at("val"))});
  }
  if (!coeff_terms.empty() && !val_terms.empty())
    fail(Err::Unsupported, "valued polynomial json: mixed coeff/val terms");
  if (!coeff_terms.empty()) {
    if (!prime) fail(Err::NotPrime, "valued polynomial json: coefficients need a prime");
    return tropicalize(coeff_terms, *prime);
  }
  ValuedPolynomial f = valued_from_support(n, val_terms);
  f.prime = prime;
  return f;
}

Json subdivision_to_json(const RegularSubdivision& s) {
  Json out;
  out["schema"] = kSchema;
  out["type"] = "regular_subdivision";
  out["ambient_dim"] = s.ambient_dim;
  Json support = Json::array();
  for (size_t i = 0; i < s.points.size(); ++i) {
    Json p;
    p["point"] = zvec_to_json(s.points[i]);
    p["lift"] = rat_to_json(s.lifts[i]);
    support.push_back(p);
  }
  out["support"] = support;
  Json cells = Json::array();
  for (int mid : s.maximal_faces) {
    Json c;
    c["points"] = s.faces[mid].pts;
    c["dim"] = s.faces[mid].dim;
    cells.push_back(c);
  }
  out["cells"] = cells;
  Json faces = Json::array();
  for (const auto& f : s.faces) {
    Json jf;
    jf["points"] = f.pts;
    jf["dim"] = f.dim;
    jf["maximal"] = f.maximal;
    faces.push_back(jf);
  }
  out["faces"] = faces;
  return out;
}

Json complex_to_json(const TropicalComplex& x) {
  Json out;
  out["schema"] = kSchema;
  out["type"] = "tropical_complex";
  out["ambient_dim"] = x.ambient_dim;
  if (x.pure_dim >= 0) out["pure_dim"] = x.pure_dim;
  Json verts = Json::array();
  for (const auto& v : x.vertices) verts.push_back(qvec_to_json(v));
  out["vertices"] = verts;
  Json cells = Json::array();
  for (const auto& c : x.cells) {
    Json jc;
    jc["vertices"] = c.vertices;
    jc["rays"] = zmat_to_json(c.rays);
    jc["dim"] = c.dim;
    jc["weight"] = c.weight.get_str();
    if (c.dual_face >= 0) jc["dual_cell"] = c.dual_face;
    cells.push_back(jc);
  }
  out["cells"] = cells;
  if (x.dual) out["subdivision"] = subdivision_to_json(*x.dual);
  if (x.poly) out["polynomial"] = valued_poly_to_json(*x.poly);
  return out;
}

TropicalComplex complex_from_json(const Json& j) {
  TropicalComplex x;
  x.ambient_dim = j.at("ambient_dim");
  if (j.contains("pure_dim")) x.pure_dim = j["pure_dim"];
  for (const auto& v : j.at("vertices")) x.vertices.push_back(qvec_from_json(v));
  for (const auto& jc : j.at("cells")) {
    TCCell c;
    for (const auto& v : jc.at("vertices")) c.vertices.push_back((int)v);
    c.rays = zmat_from_json(jc.at("rays"));
    c.dim = jc.at("dim");
    if (jc.contains("weight")) c.weight = Int(jc["weight"].get<std::string>());
    if (jc.contains("dual_cell")) c.dual_face = jc["dual_cell"];
    x.cells.push_back(c);
  }
  if (j.contains("polynomial"))
    x.poly = std::make_shared<ValuedPolynomial>(valued_poly_from_json(j["polynomial"]));
  return x;
}

Json report_to_json(const IntersectionReport& r) {
  Json out;
  out["schema"] = kSchema;
  out["type"] = "intersection_report";
  out["n"] = r.n;
  out["k"] = r.k;
  out["proper"] = r.proper;
  out["proper_vacuous"] = r.proper_vacuous;
  out["complex"] = complex_to_json(r.complex);
  Json decos = Json::array();
  for (const auto& d : r.decomposition) {
    Json jd;
    jd["product_face"] = d.product_face;
    jd["summand_faces"] = d.summand_faces;
    jd["summand_dims"] = d.summand_dims;
    jd["transversal"] = d.transversal_here;
    decos.push_back(jd);
  }
  out["decomposition"] = decos;
  out["product_subdivision"] = subdivision_to_json(*r.product);
  return out;
}

Json fiber_to_json(const FiberPolytope& f) {
  Json out = polytope_to_json(f.polytope);
  out["type"] = "fiber_polytope";
  out["psi"] = zvec_to_json(f.psi.coeffs);
  out["source"] = f.source == FiberSource::Plain ? "plain" : "mixed";
  out["factors"] = f.factor_count;
  return out;
}

namespace {

const char* kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::Edge: return "edge";
    case PieceKind::Ray: return "ray";
    case PieceKind::Line: return "line";
  }
  return "?";
}

}  // namespace

Json sip_report_to_json(const PlaneCurveImage& img) {
  Json out;
  out["schema"] = kSchema;
  out["type"] = "self_intersections";
  out["count"] = img.sips.size();
  Json pts = Json::array();
  for (const auto& sip : img.sips) {
    Json js;
    js["pt"] = qvec_to_json(sip.point);
    Json faces = Json::array();
    Json kinds = Json::array();
    for (size_t i = 0; i < sip.piece_pairs.size(); ++i) {
      faces.push_back(Json::array({img.pieces[sip.piece_pairs[i].first].source_cell,
                                   img.pieces[sip.piece_pairs[i].second].source_cell}));
      kinds.push_back(Json::array(
          {kind_name(sip.kinds[i].first), kind_name(sip.kinds[i].second)}));
    }
    js["faces"] = faces.size() == 1 ? faces[0] : faces;
    js["kinds"] = kinds.size() == 1 ? kinds[0] : kinds;
    pts.push_back(js);
  }
  out["points"] = pts;
  Json pieces = Json::array();
  for (const auto& pc : img.pieces) {
    Json jp;
    jp["source_cell"] = pc.source_cell;
    jp["kind"] = kind_name(pc.kind);
    jp["base"] = qvec_to_json(pc.base);
    jp["dir"] = qvec_to_json(pc.dir);
    if (pc.kind == PieceKind::Edge) jp["length"] = rat_to_json(pc.length);
    pieces.push_back(jp);
  }
  out["pieces"] = pieces;
  if (img.dual_subdivision)
    out["dual_subdivision"] = dual_subdivision_to_json(*img.dual_subdivision);
  return out;
}

Json dual_subdivision_to_json(const ImageDualSubdivision& ds) {
  Json out;
  out["schema"] = kSchema;
  out["type"] = "image_dual_subdivision";
  Json cells = Json::array();
  for (const auto& c : ds.cells) {
    Json jc;
    jc["polytope"] = polytope_to_json(c.poly);
    jc["p"] = c.p;
    jc["source_faces"] = c.source_faces;
    cells.push_back(jc);
  }
  out["cells"] = cells;
  Json edges = Json::array();
  for (const auto& e : ds.edges) {
    Json je;
    je["polytope"] = polytope_to_json(e.poly);
    je["source_piece"] = e.source_piece;
    edges.push_back(je);
  }
  out["edges"] = edges;
  out["hull"] = polytope_to_json(ds.hull);
  out["anchored_to_pushforward"] = ds.anchored_to_pushforward;
  return out;
}

Json line_to_json(const TropicalLine& l) {
  Json out;
  out["schema"] = kSchema;
  out["type"] = "tropical_line";
  out["n"] = l.n;
  Json edges = Json::array();
  for (const auto& [u, v] : l.tree_edges) edges.push_back(Json::array({u, v}));
  out["tree_edges"] = edges;
  out["leaf_at"] = l.leaf_at;
  Json pos = Json::array();
  for (const auto& p : l.positions) pos.push_back(qvec_to_json(p));
  out["positions"] = pos;
  out["edge_lengths"] = qvec_to_json(l.edge_lengths);
  return out;
}

TropicalLine line_from_json(const Json& j) {
  int n = j.at("n");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("tree_edges")) edges.push_back({(int)e[0], (int)e[1]});
  std::vector<int> leaf_at;
  for (const auto& v : j.at("leaf_at")) leaf_at.push_back((int)v);
  QVec lengths = qvec_from_json(j.at("edge_lengths"));
  QMat pos;
  for (const auto& p : j.at("positions")) pos.push_back(qvec_from_json(p));
  QVec base = pos.empty() ? QVec(n, Rat(0)) : pos[0];
  TropicalLine l = make_line(n, edges, leaf_at, lengths, base);
  if (!pos.empty() && pos != l.positions)
    fail(Err::Internal, "tropical line json: positions inconsistent with tree data");
  return l;
}

ZMat parse_matrix(const std::string& text) {
  ZMat out;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::stringstream entries(row);
    ZVec r;
    std::string e;
    while (entries >> e) r.push_back(Int(e));
    if (!r.empty()) out.push_back(r);
  }
  if (out.empty()) fail(Err::EmptyInput, "empty matrix");
  for (const auto& r : out)
    if (r.size() != out[0].size()) fail(Err::DimMismatch, "ragged matrix");
  return out;
}

}  // namespace trop
