// tropicast: exact tropical geometry from the command line.
//
// JSON in, JSON/CSV/SVG out.  Exit codes: 0 success, 1 usage error,
// 2 geometric degeneracy (with a machine-readable error report on stdout).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "tropicast/json_io.hpp"
#include "tropicast/svg.hpp"

using namespace trop;

namespace {

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Err::EmptyInput, "cannot read " + path);
  Json j;
  f >> j;
  return j;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) fail(Err::Internal, "cannot write " + out_path);
    f << j.dump(2) << "\n";
  }
}

std::vector<TropicalComplex> hypersurfaces_of_system(const Json& j) {
  std::vector<TropicalComplex> hs;
  if (j.contains("system")) {
    for (const auto& jf : j["system"]) hs.push_back(hypersurface(valued_poly_from_json(jf)));
  } else {
    hs.push_back(hypersurface(valued_poly_from_json(j)));
  }
  return hs;
}

unsigned long effective_seed(unsigned long seed) {
  if (const char* env = std::getenv("TROPICAST_SEED")) return std::strtoul(env, nullptr, 10);
  return seed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropicast: exact tropical curves, projections and fiber polytopes"};
  app.require_subcommand(1);

  std::string in_path, out_path, matrix_text, psi_text, svg_path, pushforward_path;
  std::string family = "caterpillar";
  long prime = 2;
  int n = 3;
  int trials = 100;
  unsigned long seed = 0;
  std::vector<std::string> poly_paths;

  auto* trop_cmd = app.add_subcommand("tropicalize", "p-adic tropicalization of a polynomial");
  trop_cmd->add_option("--poly", in_path, "polynomial JSON")->required();
  trop_cmd->add_option("--prime", prime, "prime for the valuation");
  trop_cmd->add_option("--out", out_path, "output path");

  auto* hyp_cmd = app.add_subcommand("hypersurface", "tropical hypersurface with dual subdivision");
  hyp_cmd->add_option("--poly", in_path, "valued polynomial JSON")->required();
  hyp_cmd->add_option("--out", out_path, "output path");

  auto* int_cmd = app.add_subcommand("intersect", "intersection of tropical hypersurfaces");
  int_cmd->add_option("--polys", poly_paths, "valued polynomial JSON files")->required();
  int_cmd->add_option("--out", out_path, "output path");

  auto* proj_cmd = app.add_subcommand("project", "project a curve to the plane");
  proj_cmd->add_option("--curve", in_path, "system/curve JSON")->required();
  proj_cmd->add_option("--matrix", matrix_text, "2 x n integer matrix, rows ';'-separated")->required();
  proj_cmd->add_option("--out", out_path, "output path");
  proj_cmd->add_option("--svg", svg_path, "write an SVG of the image");

  auto* sip_cmd = app.add_subcommand("selfint", "count self-intersections of a projected curve");
  sip_cmd->add_option("--curve", in_path, "system/curve JSON")->required();
  sip_cmd->add_option("--matrix", matrix_text, "2 x n integer matrix")->required();
  sip_cmd->add_option("--out", out_path, "output path");
  sip_cmd->add_option("--svg", svg_path, "write an SVG of the image");

  auto* fib_cmd = app.add_subcommand("fiber", "fiber polytope of a polytope under psi");
  fib_cmd->add_option("--polytope", in_path, "polytope JSON")->required();
  fib_cmd->add_option("--psi", psi_text, "integer functional, e.g. \"1 1 1\"")->required();
  fib_cmd->add_option("--out", out_path, "output path");

  auto* mix_cmd = app.add_subcommand("mixedfiber", "mixed fiber polytope");
  mix_cmd->add_option("--polytopes", poly_paths, "polytope JSON files")->required();
  mix_cmd->add_option("--psi", psi_text, "integer functional")->required();
  mix_cmd->add_option("--out", out_path, "output path");

  auto* dual_cmd = app.add_subcommand("dualsub", "dual subdivision of a projected curve");
  dual_cmd->add_option("--system", in_path, "system JSON")->required();
  dual_cmd->add_option("--matrix", matrix_text, "2 x n integer matrix")->required();
  dual_cmd->add_option("--pushforward", pushforward_path, "pushforward polynomial JSON");
  dual_cmd->add_option("--out", out_path, "output path");
  dual_cmd->add_option("--svg", svg_path, "write an SVG of the subdivision");

  auto* cat_cmd = app.add_subcommand("caterpillar", "caterpillar line and its system");
  cat_cmd->add_option("--n", n, "ambient dimension")->required();
  cat_cmd->add_option("--out", out_path, "output path");

  auto* sweep_cmd = app.add_subcommand("sweep", "randomized caterpillar bound sweep (CSV)");
  sweep_cmd->add_option("--family", family, "sweep family (caterpillar)");
  sweep_cmd->add_option("--n", n, "ambient dimension")->required();
  sweep_cmd->add_option("--trials", trials, "number of trials");
  sweep_cmd->add_option("--seed", seed, "random seed (TROPICAST_SEED overrides)");
  sweep_cmd->add_option("--out", out_path, "output CSV path");

  auto* svg_cmd = app.add_subcommand("svg", "render a 2-dimensional artifact JSON");
  svg_cmd->add_option("--in", in_path, "artifact JSON")->required();
  svg_cmd->add_option("--out", out_path, "output SVG path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*trop_cmd) {
      Json j = read_json(in_path);
      std::vector<std::pair<ZVec, Rat>> monos;
      for (const auto& jt : j.at("terms"))
        monos.push_back({zvec_from_json(jt.at("exp")), rat_from_json(jt.at("coeff"))});
      emit(valued_poly_to_json(tropicalize(monos, prime)), out_path);
    } else if (*hyp_cmd) {
      emit(complex_to_json(hypersurface(valued_poly_from_json(read_json(in_path)))), out_path);
    } else if (*int_cmd) {
      std::vector<TropicalComplex> hs;
      for (const auto& p : poly_paths)
        hs.push_back(hypersurface(valued_poly_from_json(read_json(p))));
      emit(report_to_json(intersect(hs)), out_path);
    } else if (*proj_cmd || *sip_cmd) {
      Json j = read_json(in_path);
      ZMat a = parse_matrix(matrix_text);
      TropicalComplex curve;
      if (j.contains("system") || j.contains("terms")) {
        IntersectionReport rep = intersect(hypersurfaces_of_system(j));
        curve = rep.complex;
      } else {
        curve = complex_from_json(j);
      }
      PlaneCurveImage img = project_and_intersect(curve, a);
      if (!svg_path.empty()) write_file(svg_path, svg_plane_curve(img));
      emit(sip_report_to_json(img), out_path);
    } else if (*fib_cmd) {
      Polytope p = polytope_from_json(read_json(in_path));
      ZVec psi;
      for (const auto& row : parse_matrix(psi_text)) for (const auto& x : row) psi.push_back(x);
      emit(fiber_to_json(fiber_polytope(p, make_functional(psi))), out_path);
    } else if (*mix_cmd) {
      std::vector<Polytope> ps;
      for (const auto& path : poly_paths) ps.push_back(polytope_from_json(read_json(path)));
      ZVec psi;
      for (const auto& row : parse_matrix(psi_text)) for (const auto& x : row) psi.push_back(x);
      emit(fiber_to_json(mixed_fiber_polytope(ps, make_functional(psi))), out_path);
    } else if (*dual_cmd) {
      Json j = read_json(in_path);
      ZMat a = parse_matrix(matrix_text);
      IntersectionReport rep = intersect(hypersurfaces_of_system(j));
      std::optional<ValuedPolynomial> push;
      if (!pushforward_path.empty())
        push = valued_poly_from_json(read_json(pushforward_path));
      PlaneCurveImage img = image_dual_subdivision(rep, a, push ? &*push : nullptr);
      if (!svg_path.empty()) write_file(svg_path, svg_dual_subdivision(*img.dual_subdivision));
      emit(sip_report_to_json(img), out_path);
    } else if (*cat_cmd) {
      CaterpillarLine cl = caterpillar(n);
      Json out = line_to_json(cl.line);
      Json sys = Json::array();
      for (const auto& f : cl.system) sys.push_back(valued_poly_to_json(f));
      out["system"] = sys;
      emit(out, out_path);
    } else if (*sweep_cmd) {
      if (family != "caterpillar") fail(Err::Unsupported, "unknown sweep family: " + family);
      auto rows = sweep_caterpillar(n, trials, effective_seed(seed));
      std::ostringstream csv;
      csv << "n,trial,count,bound,ok\n";
      for (const auto& r : rows)
        csv << r.n << "," << r.trial << "," << r.count << "," << r.bound << ","
            << (r.ok ? "true" : "false") << "\n";
      if (out_path.empty()) std::cout << csv.str();
      else write_file(out_path, csv.str());
    } else if (*svg_cmd) {
      Json j = read_json(in_path);
      std::string type = j.value("type", "");
      if (type == "self_intersections") {
        // Rebuild enough of the image for rendering.
        PlaneCurveImage img;
        for (const auto& jp : j.at("pieces")) {
          ImagePiece pc;
          pc.source_cell = jp.at("source_cell");
          std::string k = jp.at("kind");
          pc.kind = k == "edge" ? PieceKind::Edge : (k == "ray" ? PieceKind::Ray : PieceKind::Line);
          pc.base = qvec_from_json(jp.at("base"));
          pc.dir = qvec_from_json(jp.at("dir"));
          if (jp.contains("length")) pc.length = rat_from_json(jp["length"]);
          img.pieces.push_back(pc);
        }
        for (const auto& js : j.at("points")) {
          SelfIntersection sip;
          sip.point = qvec_from_json(js.at("pt"));
          img.sips.push_back(sip);
        }
        write_file(out_path, svg_plane_curve(img));
      } else if (type == "tropical_complex" && j.contains("subdivision") &&
                 (int)j["subdivision"]["ambient_dim"] == 2) {
        ValuedPolynomial f = valued_poly_from_json(j.at("polynomial"));
        RegularSubdivision sub = lower_hull_subdivision(f.support(), f.valuations());
        write_file(out_path, svg_subdivision(sub));
      } else if (type == "valued_polynomial") {
        ValuedPolynomial f = valued_poly_from_json(j);
        if (f.n_vars != 2) fail(Err::NotPlanar, "svg: polynomial is not bivariate");
        write_file(out_path, svg_subdivision(lower_hull_subdivision(f.support(), f.valuations())));
      } else {
        fail(Err::NotPlanar, "svg: unsupported or non-planar payload");
      }
    }
  } catch (const TropError& e) {
    Json err;
    err["schema"] = kSchema;
    err["error"] = {{"code", err_name(e.code)}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
