#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tropicast/subdivision.hpp"

using namespace trop;
using namespace testsupport;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

ZVec zv(std::initializer_list<long> xs) {
  ZVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

Polytope unit_cube() {
  QMat pts;
  for (int m = 0; m < 8; ++m)
    pts.push_back(qv({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
  return convex_hull(pts);
}

Polytope simplex3() {  // conv{0, e1, e2, e3}
  return convex_hull({qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});
}

}  // namespace

TEST_CASE("convex_hull removes interior points") {
  QMat pts = {qv({0, 0}), qv({1, 0}), qv({0, 1})};
  pts.push_back({frac(1, 2), frac(1, 4)});
  Polytope p = convex_hull(pts);
  CHECK(p.dim == 2);
  CHECK(p.vertices == QMat{qv({0, 0}), qv({0, 1}), qv({1, 0})});
}

TEST_CASE("convex_hull of a pushforward support keeps one interior point") {
  // Support {(1,0),(0,2),(3,2),(2,4),(6,2)}: all vertices except (3,2).
  QMat pts = {qv({1, 0}), qv({0, 2}), qv({3, 2}), qv({2, 4}), qv({6, 2})};
  Polytope p = convex_hull(pts);
  CHECK(p.vertices.size() == 4);
  for (const auto& q : pts) {
    bool vertex_by_lp = lp_is_vertex(pts, q);
    bool vertex_in_hull =
        std::find(p.vertices.begin(), p.vertices.end(), q) != p.vertices.end();
    CHECK(vertex_by_lp == vertex_in_hull);
    CHECK(vertex_by_lp == !(q == qv({3, 2})));
  }
}

TEST_CASE("convex_hull of the cube keeps all corners") {
  Polytope p = unit_cube();
  CHECK(p.vertices.size() == 8);
  CHECK(p.dim == 3);
}

TEST_CASE("convex_hull rejects empty input") {
  CHECK_THROWS_AS(convex_hull({}), TropError);
}

TEST_CASE("hull idempotence") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    int n = 2 + (int)(rng() % 3);
    QMat pts;
    for (int i = 0; i < 9; ++i) pts.push_back(rand_qvec(rng, n));
    Polytope p = convex_hull(pts);
    Polytope q = convex_hull(p.vertices);
    CHECK(p == q);
  }
}

TEST_CASE("minkowski_sum identity and doubling") {
  Polytope s = simplex3();
  Polytope origin = make_point(qv({0, 0, 0}));
  CHECK(minkowski_sum(s, origin) == s);
  // P + P = 2P for convex P (both standard simplices from a linear system).
  CHECK(minkowski_sum(s, s) == scale_polytope(s, 2));
}

TEST_CASE("minkowski_sum dimension mismatch") {
  CHECK_THROWS_AS(minkowski_sum(make_point(qv({0, 0})), make_point(qv({0, 0, 0}))),
                  TropError);
}

TEST_CASE("support function additivity and face distributivity") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    Polytope p = rand_lattice_polytope(rng, 3, 6);
    Polytope q = rand_lattice_polytope(rng, 3, 6);
    Polytope s = minkowski_sum(p, q);
    for (int i = 0; i < 100; ++i) {
      QVec w = rand_qvec(rng, 3);
      if (is_zero(w)) continue;
      auto h = [&](const Polytope& x) {
        Rat best = dot(w, x.vertices[0]);
        for (const auto& v : x.vertices) best = std::max(best, dot(w, v));
        return best;
      };
      CHECK(h(s) == h(p) + h(q));
      CHECK(face_in_direction(s, w) ==
            minkowski_sum(face_in_direction(p, w), face_in_direction(q, w)));
    }
  }
}

TEST_CASE("face_in_direction on the cube") {
  Polytope cube = unit_cube();
  Polytope f = face_in_direction(cube, qv({0, -1, 0}));
  CHECK(f.vertices ==
        QMat{qv({0, 0, 0}), qv({0, 0, 1}), qv({1, 0, 0}), qv({1, 0, 1})});
  CHECK(f.dim == 2);
  // Face of a face composes.
  Polytope e = face_in_direction(f, qv({1, 0, 0}));
  CHECK(e == face_in_direction(face_in_direction(cube, qv({0, -1, 0})), qv({1, 0, 0})));
  CHECK(e.dim == 1);
}

TEST_CASE("face_in_direction generic direction gives a vertex") {
  std::mt19937_64 rng(13);
  Polytope p = rand_lattice_polytope(rng, 3);
  Polytope f = face_in_direction(p, {Rat(97), frac(89, 7), frac(83, 49)});
  CHECK(f.dim == 0);
}

TEST_CASE("face_in_direction rejects the zero direction") {
  CHECK_THROWS_AS(face_in_direction(unit_cube(), qv({0, 0, 0})), TropError);
}

TEST_CASE("minkowski_difference roundtrip and certification") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 12; ++t) {
    int n = 2 + (int)(rng() % 2);
    Polytope p = rand_lattice_polytope(rng, n, 6);
    Polytope q = rand_lattice_polytope(rng, n, 5);
    Polytope s = minkowski_sum(p, q);
    auto r = minkowski_difference(s, q);
    REQUIRE(r.has_value());
    CHECK(*r == p);
    CHECK(minkowski_sum(q, *r) == s);
  }
}

TEST_CASE("minkowski_difference detects impossible differences") {
  // Unit square minus a segment of length 2 along x.
  Polytope sq = convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
  Polytope seg = convex_hull({qv({0, 0}), qv({2, 0})});
  CHECK(!minkowski_difference(sq, seg).has_value());
}

TEST_CASE("lower_hull_subdivision of a simplex support is trivial") {
  // Valuations of x + 2y + z - 4 under the 2-adic valuation: lifts 0,1,0,2.
  ZMat support = {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1}), zv({0, 0, 0})};
  QVec lifts = {Rat(0), Rat(1), Rat(0), Rat(2)};
  RegularSubdivision sub = lower_hull_subdivision(support, lifts);
  CHECK(sub.flat);
  CHECK(sub.maximal_faces.size() == 1);
  CHECK(sub.cell(0).pts == std::vector<int>{0, 1, 2, 3});
  // Its face poset contains the four 2-dimensional boundary faces.
  int two_faces = 0;
  for (const auto& f : sub.faces)
    if (f.dim == 2) ++two_faces;
  CHECK(two_faces == 4);
}

TEST_CASE("lower_hull_subdivision with flat lift is a single cell") {
  ZMat support = {zv({0, 0}), zv({1, 0}), zv({0, 1}), zv({2, 1})};
  QVec lifts(4, Rat(0));
  RegularSubdivision sub = lower_hull_subdivision(support, lifts);
  CHECK(sub.flat);
  CHECK(sub.maximal_faces.size() == 1);
}

TEST_CASE("lower_hull_subdivision of the pushforward support has a quadrangle") {
  ZMat support = {zv({1, 0}), zv({0, 2}), zv({3, 2}), zv({2, 4}), zv({6, 2})};
  QVec lifts = {Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)};
  RegularSubdivision sub = lower_hull_subdivision(support, lifts);
  CHECK(!sub.flat);
  CHECK(sub.maximal_faces.size() == 3);
  int quads = 0;
  for (int mid : sub.maximal_faces) {
    Polytope cell = sub.face_polytope(mid);
    if (cell.vertices.size() == 4) ++quads;
  }
  CHECK(quads == 1);
}

TEST_CASE("subdivision covering: volumes add and points lift above") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 8; ++t) {
    int n = 2 + (int)(rng() % 2);
    ZMat support;
    std::set<ZVec> seen;
    while (support.size() < 7) {
      ZVec p = rand_zvec(rng, n, 0, 4);
      if (seen.insert(p).second) support.push_back(p);
    }
    QVec lifts;
    for (size_t i = 0; i < support.size(); ++i) lifts.push_back(rand_rat(rng, 3, 2));
    RegularSubdivision sub = lower_hull_subdivision(support, lifts);

    Polytope hull = convex_hull_z(support);
    if (hull.dim < n) continue;
    Int total = 0;
    for (int mid : sub.maximal_faces) {
      ZMat pts;
      for (int i : sub.faces[mid].pts) pts.push_back(support[i]);
      total += normalized_volume(pts);
    }
    CHECK(total == normalized_volume(support));

    // Every support point lies on or above the lower hull: for each cell
    // exposure w, the cell attains the minimum of lift + w.point.
    for (int mid : sub.maximal_faces) {
      const SubFace& c = sub.faces[mid];
      Rat base = lifts[c.pts[0]] + dot_zq(support[c.pts[0]], c.expose);
      for (size_t i = 0; i < support.size(); ++i) {
        Rat val = lifts[i] + dot_zq(support[i], c.expose);
        CHECK(val >= base);
      }
    }
  }
}

TEST_CASE("normalized lattice volume basics") {
  CHECK(normalized_volume({zv({0, 0}), zv({1, 0}), zv({0, 1})}) == 1);
  CHECK(normalized_volume({zv({0, 0}), zv({2, 0}), zv({0, 2}), zv({2, 2})}) == 8);
  CHECK(lattice_length(zv({0, 0, 0}), zv({2, 4, 6})) == 2);
}
