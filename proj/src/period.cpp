#include "fano/period.hpp"

#include <algorithm>

namespace fano {

namespace {

using Poly2 = std::map<Vec2, BigInt>;

Poly2 a_triangle_poly(const ATriangle& t) {
  Poly2 f;
  if (t.kind == -1) {
    f[t.verts[0]] = 1;
    f[t.verts[1]] = 1;
    return f;
  }
  // the long edge has lattice length kind+1; apex is the opposite vertex
  LatticePolygon tri = convex_hull2(t.verts);
  Int m = t.kind + 1;
  int long_edge = -1;
  for (int i = 0; i < 3; ++i)
    if (tri.edge_len(i) == m) long_edge = i;
  if (long_edge < 0) throw invariant_error("a_triangle_poly: no long edge");
  Vec2 apex = tri.vertex(long_edge + 2);
  Vec2 base = tri.vertex(long_edge);
  Vec2 dir = tri.edge_dir(long_edge);
  f[apex] = 1;
  for (Int k = 0; k <= m; ++k) f[base + k * dir] += binom(m, k);
  return f;
}

}  // namespace

LaurentPoly3 minkowski_polynomial(
    const LatticePolytope3& p,
    const std::vector<AdmissibleDecomposition>& per_facet) {
  if (per_facet.size() != p.facets.size())
    throw input_error("minkowski_polynomial: one decomposition per facet");
  LaurentPoly3 w;
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    FacetChart ch = facet_chart(p, static_cast<int>(fi));
    Poly2 prod;
    prod[{0, 0}] = 1;
    for (const auto& t : per_facet[fi].summands) {
      Poly2 next;
      for (const auto& [u, cu] : prod)
        for (const auto& [v, cv] : a_triangle_poly(t)) next[u + v] += cu * cv;
      prod = std::move(next);
    }
    for (const auto& [v, c] : prod) {
      if (c == 0) continue;
      Vec3 pt = ch.from_chart(v);
      auto it = w.find(pt);
      if (it != w.end()) {
        // shared-edge coefficients must agree between the two facets
        if (it->second != c)
          throw invariant_error("minkowski_polynomial: edge inconsistency");
      } else {
        w[pt] = c;
      }
    }
  }
  return w;
}

std::vector<BigInt> classical_period(const LaurentPoly3& w, int n) {
  std::vector<BigInt> c(n + 1, 0);
  c[0] = 1;
  if (n == 0) return c;

  // facet normals of the Newton polytope, for containment pruning; skipped
  // when the support is degenerate
  std::vector<std::pair<Vec3, Int>> walls;  // (normal, level)
  {
    std::vector<Vec3> supp;
    for (const auto& [v, coeff] : w)
      if (coeff != 0) supp.push_back(v);
    try {
      LatticePolytope3 np = convex_hull3(supp);
      for (const auto& f : np.facets) walls.push_back({f.normal, f.level});
    } catch (const input_error&) {
    }
  }

  LaurentPoly3 g;
  g[{0, 0, 0}] = 1;
  for (int m = 1; m <= n; ++m) {
    LaurentPoly3 next;
    for (const auto& [u, cu] : g) {
      if (cu == 0) continue;
      for (const auto& [v, cv] : w) {
        if (cv == 0) continue;
        Vec3 s = u + v;
        // keep only exponents that can still telescope back to 0:
        // -s must lie in (n - m) * Newton(w)
        bool ok = true;
        for (const auto& [nor, lvl] : walls)
          if (dot(nor, Vec3{-s.x, -s.y, -s.z}) > (n - m) * lvl) {
            ok = false;
            break;
          }
        if (ok) next[s] += cu * cv;
      }
    }
    g = std::move(next);
    auto it = g.find({0, 0, 0});
    c[m] = it == g.end() ? BigInt(0) : it->second;
  }
  return c;
}

}  // namespace fano
