#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fano/invariants.hpp"

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

LatticePolytope3 octahedron() {
  return convex_hull3(
      {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

Amd first_amd(const LatticePolytope3& p) {
  Amd out;
  AmdOptions opt;
  opt.limit = 1;
  enumerate_amd(p, opt, [&](const Amd& a) {
    out = a;
    return false;
  });
  return out;
}

// n_e as a straight sum of pair multiplicities.
Int node_count_brute(Int k, const std::vector<int>& f,
                     const std::vector<int>& g) {
  Int n = 0;
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = i + 1; j < f.size(); ++j)
      n += k - (f[i] == f[j] ? 1 : 0) - (g[i] == g[j] ? 1 : 0);
  return n;
}

}  // namespace

TEST_CASE("node_count_edge against direct pair sums") {
  // dull edge of length 4: {1,3}|{2,4} against {1,4}|{2,3};
  // only the pairs (1,2) and (3,4) are split on both sides
  CHECK(node_count_edge(4, 1, {0, 1, 0, 1}, {0, 1, 1, 0}) == 2);
  // k = 2, both sides split into singletons: C(2,2) counting gives 2
  CHECK(node_count_edge(2, 2, {0, 1}, {0, 1}) == 2);
  CHECK(node_count_edge(1, 3, {0}, {0}) == 0);
  // both segments lumped together on both sides of a dull edge: m_12 = -1
  CHECK_THROWS_AS(node_count_edge(2, 1, {0, 0}, {0, 0}), invariant_error);
  CHECK_THROWS_AS(node_count_edge(2, 1, {0, 1}, {0}), input_error);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Int l = 2 + rng() % 5;
    Int k = 1 + rng() % 3;
    std::vector<int> f(l), g(l);
    for (Int s = 0; s < l; ++s) {
      f[s] = rng() % 3;
      g[s] = rng() % 3;
    }
    Int brute = node_count_brute(k, f, g);
    if (brute < 0 || (k == 1 && !matching_condition(f, g))) continue;
    CHECK(node_count_edge(l, k, f, g) == brute);
  }
}

TEST_CASE("t1 dimension") {
  CHECK(t1_dimension(simplex64(), first_amd(simplex64())) == 22);
  CHECK(t1_dimension(cube(), first_amd(cube())) == 24);
}

TEST_CASE("degree and anticanonical sections") {
  CHECK(polytope_degree(cube()) == 8);
  CHECK(polar_lattice_points(cube()) == 7);
  CHECK(polytope_degree(simplex64()) == 64);
  CHECK(polar_lattice_points(simplex64()) == 35);
  CHECK(polytope_degree(octahedron()) == 48);
  CHECK(polar_lattice_points(octahedron()) == 27);
}

TEST_CASE("degree-64 simplex: smooth toric case") {
  LatticePolytope3 p = simplex64();
  SmoothingInvariants inv = betti_numbers(p, first_amd(p));
  CHECK(inv.n == 0);
  CHECK(inv.q == 0);
  CHECK(inv.sigma == 0);
  CHECK(inv.picY == 1);
  CHECK(inv.b2 == 1);
  CHECK(inv.b3 == 0);
  CHECK(inv.eXeta == 4);
  CHECK(inv.degree == 64);
  CHECK(inv.h0 == 35);
  CHECK(inv.t1dim == 22);
}

TEST_CASE("cube invariants") {
  LatticePolytope3 p = cube();
  Amd a = first_amd(p);
  SmoothingInvariants inv = betti_numbers(p, a);
  CHECK(inv.n == 12);
  CHECK(inv.q == 24);
  CHECK(inv.eY == 24);
  CHECK(inv.eYt == 0);
  CHECK(inv.eXeta == -24);
  CHECK(inv.picY == 4);
  CHECK(inv.sigma == 3);
  CHECK(inv.b2 == 1);
  CHECK(inv.b3 == 28);
  CHECK(inv.degree == 8);
  CHECK(inv.h0 == 7);
  CHECK(inv.t1dim == 24);
}

TEST_CASE("node classes annihilate pullbacks and global linears") {
  LatticePolytope3 p = cube();
  Amd a = first_amd(p);
  Fan3 y = refine_by_amd(p, a);
  auto nodes = node_records(p, a, y);
  REQUIRE(!nodes.empty());

  RatMat pulls = pullback_space(p, y);
  CHECK(rat_rank(pulls) >= 3);  // contains all global linear functions
  for (const auto& nd : nodes)
    for (const auto& row : pulls) {
      Rat s = 0;
      for (size_t r = 0; r < row.size(); ++r) s += nd.cls[r] * row[r];
      CHECK(s == 0);
    }

  // coordinate functions u -> <u, e_i> are pullbacks themselves
  for (int axis = 0; axis < 3; ++axis) {
    RatVec lin(y.rays.size());
    for (size_t r = 0; r < y.rays.size(); ++r)
      lin[r] = axis == 0 ? y.rays[r].x : axis == 1 ? y.rays[r].y : y.rays[r].z;
    RatMat ext = pulls;
    ext.push_back(lin);
    CHECK(rat_rank(ext) == rat_rank(pulls));
  }
}

TEST_CASE("picard rank of the refined fan") {
  Fan3 ys = refine_by_amd(simplex64(), first_amd(simplex64()));
  CHECK(picard_rank_Y(ys) == 1);
  Fan3 yc = refine_by_amd(cube(), first_amd(cube()));
  CHECK(picard_rank_Y(yc) == 4);
  // pl_space on the cube fan: 26 rays, 24 parallelogram constraints
  CHECK(static_cast<Int>(pl_space(yc).size()) == picard_rank_Y(yc) + 3);
}

TEST_CASE("betti numbers agree across all cube amd") {
  LatticePolytope3 p = cube();
  AmdOptions opt;
  opt.limit = 25;
  SmoothingInvariants ref = betti_numbers(p, first_amd(p));
  long long seen = enumerate_amd(p, opt, [&](const Amd& a) {
    SmoothingInvariants inv = betti_numbers(p, a);
    CHECK(inv.n == ref.n);
    CHECK(inv.b2 == ref.b2);
    CHECK(inv.b3 == ref.b3);
    CHECK(inv.degree == ref.degree);
    CHECK(inv.h0 == ref.h0);
    return true;
  });
  CHECK(seen == 25);
}
