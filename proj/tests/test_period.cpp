#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fano/period.hpp"

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

// hexagonal prism cap: hexagon at height 1, apex below; the hexagonal
// facet admits two decompositions (three segments / two triangles)
LatticePolytope3 hex_cap() {
  return convex_hull3({{1, 0, 1},
                       {0, 1, 1},
                       {-1, 1, 1},
                       {-1, 0, 1},
                       {0, -1, 1},
                       {1, -1, 1},
                       {0, 0, -1}});
}

std::vector<AdmissibleDecomposition> per_facet_decomps(
    const LatticePolytope3& p, size_t pick_for_hex = 0) {
  std::vector<AdmissibleDecomposition> out;
  for (size_t f = 0; f < p.facets.size(); ++f) {
    auto ds = enumerate_admissible_decompositions(
        facet_chart(p, static_cast<int>(f)).polygon);
    REQUIRE(!ds.empty());
    out.push_back(ds[std::min(pick_for_hex, ds.size() - 1)]);
  }
  return out;
}

// direct convolution, no pruning
std::vector<BigInt> period_brute(const LaurentPoly3& w, int n) {
  std::vector<BigInt> c{1};
  LaurentPoly3 g{{{0, 0, 0}, 1}};
  for (int m = 1; m <= n; ++m) {
    LaurentPoly3 h;
    for (const auto& [e1, c1] : g)
      for (const auto& [e2, c2] : w) h[e1 + e2] += c1 * c2;
    g = std::move(h);
    auto it = g.find({0, 0, 0});
    c.push_back(it == g.end() ? BigInt(0) : it->second);
  }
  return c;
}

}  // namespace

TEST_CASE("degree-64 simplex: w = x + y + z + 1/(xyz)") {
  LatticePolytope3 p = simplex64();
  LaurentPoly3 w = minkowski_polynomial(p, per_facet_decomps(p));
  REQUIRE(w.size() == 4);
  for (const auto& [e, c] : w) CHECK(c == 1);
  CHECK(w.count({1, 0, 0}) == 1);
  CHECK(w.count({-1, -1, -1}) == 1);

  auto c = classical_period(w, 12);
  CHECK(c[0] == 1);
  CHECK(c[1] == 0);
  CHECK(c[4] == 24);    // 4!/(1!^3 1!)
  CHECK(c[8] == 2520);  // 8!/(2!^3 2!)
  CHECK(c == period_brute(w, 12));
}

TEST_CASE("cube: binomial edge coefficients, facet centers at 4") {
  LatticePolytope3 p = cube();
  LaurentPoly3 w = minkowski_polynomial(p, per_facet_decomps(p));
  CHECK(w.size() == 26);
  CHECK(w.at({1, 1, 1}) == 1);   // vertex
  CHECK(w.at({1, 1, 0}) == 2);   // edge midpoint: segment * segment picks 1,2,1
  CHECK(w.at({1, 0, 0}) == 4);   // facet center: 2 * 2
  CHECK(w.count({0, 0, 0}) == 0);
  CHECK(classical_period(w, 6) == period_brute(w, 6));
}

TEST_CASE("hexagonal facet: the two decompositions give different periods") {
  LatticePolytope3 p = hex_cap();
  REQUIRE(is_reflexive(p));

  // locate the hexagon facet and check it is the only one with 2 choices
  size_t nchoices = 1;
  for (size_t f = 0; f < p.facets.size(); ++f)
    nchoices *= enumerate_admissible_decompositions(
                    facet_chart(p, static_cast<int>(f)).polygon)
                    .size();
  CHECK(nchoices == 2);

  LaurentPoly3 w0 = minkowski_polynomial(p, per_facet_decomps(p, 0));
  LaurentPoly3 w1 = minkowski_polynomial(p, per_facet_decomps(p, 1));
  CHECK(w0 != w1);
  // they agree away from the hexagon's interior lattice point
  Vec3 center{0, 0, 1};
  CHECK(w0.count(center) == 1);
  CHECK(w1.count(center) == 1);
  BigInt d = w0.at(center) - w1.at(center);
  CHECK(d != 0);
  LaurentPoly3 w0_off = w0, w1_off = w1;
  w0_off.erase(center);
  w1_off.erase(center);
  CHECK(w0_off == w1_off);

  CHECK(classical_period(w0, 8) == period_brute(w0, 8));
  CHECK(classical_period(w1, 8) == period_brute(w1, 8));
  CHECK(classical_period(w0, 8) != classical_period(w1, 8));
}

TEST_CASE("period is invariant under lattice automorphisms") {
  LatticePolytope3 p = cube();
  LaurentPoly3 w = minkowski_polynomial(p, per_facet_decomps(p));
  // apply (x,y,z) -> (y, x+y, z) to every exponent
  LaurentPoly3 wt;
  for (const auto& [e, c] : w) wt[{e.y, e.x + e.y, e.z}] = c;
  CHECK(classical_period(w, 8) == classical_period(wt, 8));
}
