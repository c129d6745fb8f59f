#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fano/lattice.hpp"

using namespace fano;

namespace {

LatticePolytope3 cube() {
  std::vector<Vec3> v;
  for (Int x : {-1, 1})
    for (Int y : {-1, 1})
      for (Int z : {-1, 1}) v.push_back({x, y, z});
  return convex_hull3(v);
}

LatticePolytope3 simplex64() {
  return convex_hull3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
}

}  // namespace

TEST_CASE("convex_hull2 extracts vertices of a square with noise points") {
  std::vector<Vec2> pts;
  for (Int x = 0; x <= 2; ++x)
    for (Int y = 0; y <= 2; ++y) pts.push_back({x, y});
  pts.push_back({1, 1});  // duplicate interior point
  LatticePolygon sq = convex_hull2(pts);
  REQUIRE(sq.size() == 4);
  CHECK(sq.verts[0] == Vec2{0, 0});  // lex-min first
  CHECK(sq.twice_area() == 8);
  CHECK(sq.lattice_points().size() == 9);
  CHECK(sq.boundary_points().size() == 8);
  CHECK(sq.contains({1, 1}));
  CHECK(sq.contains({2, 2}));
  CHECK(!sq.contains({3, 1}));
  // CCW orientation: every edge turn is positive
  for (int i = 0; i < 4; ++i)
    CHECK(cross(sq.vertex(i + 1) - sq.vertex(i),
                sq.vertex(i + 2) - sq.vertex(i + 1)) > 0);
}

TEST_CASE("convex_hull2 rejects degenerate input") {
  CHECK_THROWS_AS(convex_hull2({{0, 0}, {1, 1}, {2, 2}}), input_error);
  CHECK(hull2_allow_degenerate({{0, 0}, {1, 1}, {2, 2}}).size() == 2);
  CHECK(hull2_allow_degenerate({{3, 4}, {3, 4}}).size() == 1);
}

TEST_CASE("cube hull combinatorics") {
  LatticePolytope3 c = cube();
  CHECK(c.verts.size() == 8);
  CHECK(c.facets.size() == 6);
  CHECK(c.edges.size() == 12);
  CHECK(c.origin_interior());
  CHECK(c.boundary_lattice_points().size() == 26);
  for (const auto& f : c.facets) {
    CHECK(f.level == 1);
    CHECK(f.verts.size() == 4);
  }
  for (const auto& e : c.edges) CHECK(c.verts[e.v0] < c.verts[e.v1]);
}

TEST_CASE("reflexivity") {
  CHECK(is_reflexive(cube()));
  CHECK(is_reflexive(simplex64()));
  CHECK(is_reflexive(convex_hull3({{1, 0, 0},
                                   {-1, 0, 0},
                                   {0, 1, 0},
                                   {0, -1, 0},
                                   {0, 0, 1},
                                   {0, 0, -1}})));
  // doubled cube: origin interior but facet levels 2
  std::vector<Vec3> v;
  for (Int x : {-2, 2})
    for (Int y : {-2, 2})
      for (Int z : {-2, 2}) v.push_back({x, y, z});
  CHECK(!is_reflexive(convex_hull3(v)));
  // translated cube: origin not interior
  std::vector<Vec3> w;
  for (Int x : {4, 6})
    for (Int y : {-1, 1})
      for (Int z : {-1, 1}) w.push_back({x, y, z});
  CHECK(!is_reflexive(convex_hull3(w)));
}

TEST_CASE("polar dual of the cube is the octahedron") {
  RationalPolytope3 d = polar_dual(cube());
  REQUIRE(d.verts.size() == 6);
  CHECK(d.integral());
  LatticePolytope3 oct = d.to_lattice();
  CHECK(oct.facets.size() == 8);
  CHECK(oct.edges.size() == 12);
  CHECK(is_reflexive(oct));
  // dual of the dual has the cube's vertices
  RationalPolytope3 dd = polar_dual(oct);
  CHECK(dd.integral());
  CHECK(dd.verts.size() == 8);
}

TEST_CASE("edge geometry of the cube") {
  LatticePolytope3 c = cube();
  for (size_t e = 0; e < c.edges.size(); ++e) {
    EdgeGeometry g = edge_geometry(c, static_cast<int>(e));
    CHECK(g.length == 2);
    CHECK(g.colength == 1);
    REQUIRE(g.points.size() == 3);
    CHECK(g.points.front() == c.verts[c.edges[e].v0]);
    CHECK(g.points.back() == c.verts[c.edges[e].v1]);
    Vec3 u0 = c.facets[c.edges[e].f0].normal;
    CHECK(g.dual_v0 == RVec3{Rat(-u0.x), Rat(-u0.y), Rat(-u0.z)});
  }
}

TEST_CASE("edge geometry of the degree-64 simplex") {
  LatticePolytope3 s = simplex64();
  REQUIRE(s.edges.size() == 6);
  for (size_t e = 0; e < s.edges.size(); ++e) {
    EdgeGeometry g = edge_geometry(s, static_cast<int>(e));
    CHECK(g.length == 1);
    CHECK(g.colength == 4);
  }
}

TEST_CASE("facet charts are mutually inverse lattice isomorphisms") {
  for (const LatticePolytope3& p : {cube(), simplex64()}) {
    for (size_t fi = 0; fi < p.facets.size(); ++fi) {
      FacetChart ch = facet_chart(p, static_cast<int>(fi));
      const Facet& f = p.facets[fi];
      REQUIRE(ch.polygon.size() == static_cast<int>(f.verts.size()));
      CHECK(dot(f.normal, ch.origin) == f.level);
      CHECK(dot(f.normal, ch.b1) == 0);
      CHECK(dot(f.normal, ch.b2) == 0);
      for (int vi : f.verts) {
        Vec3 w = p.verts[vi];
        CHECK(ch.from_chart(ch.to_chart(w)) == w);
      }
      // chart polygon is the facet, CCW
      CHECK(ch.polygon.twice_area() > 0);
      std::vector<Vec2> img;
      for (int vi : f.verts) img.push_back(ch.to_chart(p.verts[vi]));
      LatticePolygon re = convex_hull2(img);
      CHECK(re.verts == ch.polygon.verts);
    }
  }
}

TEST_CASE("polygon_normal_form is a unimodular-affine invariant") {
  std::vector<Vec2> hex = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
  auto nf = polygon_normal_form(hex);
  auto apply = [](const std::vector<Vec2>& v, Int a, Int b, Int c, Int d,
                  Vec2 t) {
    std::vector<Vec2> out;
    for (auto p : v) out.push_back({a * p.x + b * p.y + t.x, c * p.x + d * p.y + t.y});
    return out;
  };
  CHECK(polygon_normal_form(apply(hex, 1, 1, 0, 1, {3, -2})) == nf);
  CHECK(polygon_normal_form(apply(hex, 0, -1, 1, 0, {0, 0})) == nf);
  CHECK(polygon_normal_form(apply(hex, 2, 1, 1, 1, {-5, 7})) == nf);
  // reflections (det -1) are identified too
  CHECK(polygon_normal_form(apply(hex, 0, 1, 1, 0, {1, 1})) == nf);
  // a different polygon separates
  std::vector<Vec2> tri = {{0, 0}, {2, 0}, {1, 1}};
  CHECK(polygon_normal_form(tri) != nf);
  CHECK(polygon_normal_form(apply(tri, 1, 0, 1, 1, {2, 2})) ==
        polygon_normal_form(tri));
  // segments normalize by lattice length
  CHECK(polygon_normal_form({{2, 3}, {4, 7}}) ==
        std::vector<Vec2>{{0, 0}, {2, 0}});
}
