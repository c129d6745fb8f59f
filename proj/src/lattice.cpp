#include "fano/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace fano {

// ---------------------------------------------------------------- polygons

Int LatticePolygon::twice_area() const {
  Int a = 0;
  for (int i = 0; i < size(); ++i) a += cross(vertex(i), vertex(i + 1));
  return a;
}

bool LatticePolygon::contains(Vec2 p) const {
  for (int i = 0; i < size(); ++i)
    if (cross(vertex(i + 1) - vertex(i), p - vertex(i)) < 0) return false;
  return true;
}

std::vector<Vec2> LatticePolygon::lattice_points() const {
  Int x0 = verts[0].x, x1 = x0, y0 = verts[0].y, y1 = y0;
  for (auto v : verts) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  std::vector<Vec2> pts;
  for (Int x = x0; x <= x1; ++x)
    for (Int y = y0; y <= y1; ++y)
      if (contains({x, y})) pts.push_back({x, y});
  return pts;
}

std::vector<Vec2> LatticePolygon::boundary_points() const {
  std::vector<Vec2> pts;
  for (int i = 0; i < size(); ++i) {
    Vec2 d = edge_dir(i);
    for (Int s = 0; s < edge_len(i); ++s) pts.push_back(vertex(i) + s * d);
  }
  return pts;
}

std::vector<Vec2> hull2_allow_degenerate(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw input_error("convex_hull2: no points");
  if (pts.size() == 1) return pts;
  // monotone chain, strict turns only
  auto build = [&](bool upper) {
    std::vector<Vec2> h;
    for (size_t k = 0; k < pts.size(); ++k) {
      Vec2 p = pts[upper ? pts.size() - 1 - k : k];
      while (h.size() >= 2 &&
             cross(h.back() - h[h.size() - 2], p - h[h.size() - 2]) <= 0)
        h.pop_back();
      h.push_back(p);
    }
    return h;
  };
  auto lo = build(false), up = build(true);
  lo.insert(lo.end(), up.begin() + 1, up.end() - 1);
  return lo;
}

LatticePolygon convex_hull2(std::vector<Vec2> pts) {
  auto h = hull2_allow_degenerate(std::move(pts));
  if (h.size() < 3) throw input_error("convex_hull2: degenerate input");
  // rotate lexicographic minimum first
  auto it = std::min_element(h.begin(), h.end());
  std::rotate(h.begin(), it, h.end());
  return LatticePolygon{std::move(h)};
}

// ---------------------------------------------------------------- 3d hull

bool LatticePolytope3::origin_interior() const {
  for (const auto& f : facets)
    if (f.level <= 0) return false;
  return true;
}

std::vector<Vec3> LatticePolytope3::boundary_lattice_points() const {
  Vec3 lo = verts[0], hi = verts[0];
  for (auto v : verts) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
  }
  std::vector<Vec3> pts;
  for (Int x = lo.x; x <= hi.x; ++x)
    for (Int y = lo.y; y <= hi.y; ++y)
      for (Int z = lo.z; z <= hi.z; ++z) {
        Vec3 p{x, y, z};
        bool inside = true, boundary = false;
        for (const auto& f : facets) {
          Int d = dot(f.normal, p);
          if (d > f.level) {
            inside = false;
            break;
          }
          if (d == f.level) boundary = true;
        }
        if (inside && boundary) pts.push_back(p);
      }
  return pts;
}

LatticePolytope3 convex_hull3(std::vector<Vec3> pts) {
  std::sort(pts.begin(), pts.end(),
            [](Vec3 a, Vec3 b) { return a < b; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  int n = static_cast<int>(pts.size());
  if (n < 4) throw input_error("convex_hull3: degenerate input");

  std::map<std::tuple<Int, Int, Int, Int>, std::vector<int>> planes;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec3 nv = cross(pts[j] - pts[i], pts[k] - pts[i]);
        if (nv == Vec3{0, 0, 0}) continue;
        Int base = dot(nv, pts[i]);
        bool below = true, above = true;
        for (int t = 0; t < n && (below || above); ++t) {
          Int d = dot(nv, pts[t]) - base;
          if (d > 0) below = false;
          if (d < 0) above = false;
        }
        if (!below && !above) continue;
        Vec3 outer = below ? nv : Vec3{0, 0, 0} - nv;
        outer = primitive(outer);
        Int level = dot(outer, pts[i]);
        auto key = std::make_tuple(outer.x, outer.y, outer.z, level);
        if (planes.count(key)) continue;
        std::vector<int> on;
        for (int t = 0; t < n; ++t)
          if (dot(outer, pts[t]) == level) on.push_back(t);
        planes.emplace(key, std::move(on));
      }
  if (planes.size() < 4) throw input_error("convex_hull3: degenerate input");

  LatticePolytope3 poly;
  std::map<int, int> remap;  // original point index -> vertex index
  for (auto& [key, on] : planes) {
    Vec3 outer{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
    // project out the largest normal component, hull in 2d, restore order
    int drop = 0;
    Int best = std::abs(outer.x);
    if (std::abs(outer.y) > best) { drop = 1; best = std::abs(outer.y); }
    if (std::abs(outer.z) > best) drop = 2;
    auto proj = [&](Vec3 p) -> Vec2 {
      if (drop == 0) return {p.y, p.z};
      if (drop == 1) return {p.x, p.z};
      return {p.x, p.y};
    };
    std::map<Vec2, int> back;
    std::vector<Vec2> flat;
    for (int t : on) {
      Vec2 q = proj(pts[t]);
      back[q] = t;
      flat.push_back(q);
    }
    LatticePolygon h = convex_hull2(flat);
    std::vector<int> cyc;
    for (auto q : h.verts) cyc.push_back(back.at(q));
    Vec3 m = cross(pts[cyc[1]] - pts[cyc[0]], pts[cyc[2]] - pts[cyc[0]]);
    if (dot(m, outer) < 0) std::reverse(cyc.begin(), cyc.end());

    Facet f;
    f.normal = outer;
    f.level = std::get<3>(key);
    for (int t : cyc) {
      if (!remap.count(t)) {
        remap[t] = static_cast<int>(poly.verts.size());
        poly.verts.push_back(pts[t]);
      }
      f.verts.push_back(remap[t]);
    }
    poly.facets.push_back(std::move(f));
  }

  std::map<std::pair<int, int>, std::vector<int>> edge_facets;
  for (int fi = 0; fi < static_cast<int>(poly.facets.size()); ++fi) {
    const auto& fv = poly.facets[fi].verts;
    int m = static_cast<int>(fv.size());
    for (int i = 0; i < m; ++i) {
      int a = fv[i], b = fv[(i + 1) % m];
      edge_facets[{std::min(a, b), std::max(a, b)}].push_back(fi);
    }
  }
  for (auto& [vp, fs] : edge_facets) {
    if (fs.size() != 2)
      throw invariant_error("convex_hull3: edge with facet count != 2");
    int a = vp.first, b = vp.second;
    if (!(poly.verts[a] < poly.verts[b])) std::swap(a, b);
    poly.edges.push_back({a, b, fs[0], fs[1]});
  }
  Int V = static_cast<Int>(poly.verts.size());
  Int E = static_cast<Int>(poly.edges.size());
  Int F = static_cast<Int>(poly.facets.size());
  if (V - E + F != 2) throw invariant_error("convex_hull3: Euler relation");
  return poly;
}

// ---------------------------------------------------------------- polarity

bool RationalPolytope3::integral() const {
  for (const auto& v : verts)
    if (denominator(v.x) != 1 || denominator(v.y) != 1 ||
        denominator(v.z) != 1)
      return false;
  return true;
}

LatticePolytope3 RationalPolytope3::to_lattice() const {
  if (!integral()) throw input_error("polytope has non-integral vertices");
  std::vector<Vec3> pts;
  for (const auto& v : verts)
    pts.push_back({static_cast<Int>(numerator(v.x)),
                   static_cast<Int>(numerator(v.y)),
                   static_cast<Int>(numerator(v.z))});
  return convex_hull3(pts);
}

RationalPolytope3 polar_dual(const LatticePolytope3& p) {
  if (!p.origin_interior())
    throw input_error("polar_dual: origin is not interior");
  RationalPolytope3 q;
  for (const auto& f : p.facets)
    q.verts.push_back({Rat(-f.normal.x, f.level), Rat(-f.normal.y, f.level),
                       Rat(-f.normal.z, f.level)});
  // facets of the polar correspond to vertices of p; order the incident
  // facets of each vertex cyclically by walking the edge fan
  for (int v = 0; v < static_cast<int>(p.verts.size()); ++v) {
    std::vector<int> star;  // edges at v
    for (int e = 0; e < static_cast<int>(p.edges.size()); ++e)
      if (p.edges[e].v0 == v || p.edges[e].v1 == v) star.push_back(e);
    std::vector<int> cyc;
    int f = p.edges[star[0]].f0;
    int cur = star[0];
    for (size_t step = 0; step < star.size(); ++step) {
      cyc.push_back(f);
      int next = -1;
      for (int e : star)
        if (e != cur && (p.edges[e].f0 == f || p.edges[e].f1 == f)) {
          next = e;
          break;
        }
      if (next < 0) throw invariant_error("polar_dual: broken vertex fan");
      f = p.facet_of_edge_other_than(next, f);
      cur = next;
    }
    q.facets.push_back(std::move(cyc));
  }
  for (const auto& e : p.edges) q.edges.push_back({e.f0, e.f1});
  return q;
}

bool is_reflexive(const LatticePolytope3& p) {
  if (!p.origin_interior()) return false;
  for (const auto& f : p.facets)
    if (f.level != 1) return false;
  return true;
}

// ------------------------------------------------------------- edge data

EdgeGeometry edge_geometry(const LatticePolytope3& p, int edge) {
  if (!is_reflexive(p)) throw input_error("edge_geometry: not reflexive");
  const Edge& e = p.edges[edge];
  EdgeGeometry g;
  g.edge = edge;
  Vec3 a = p.verts[e.v0], b = p.verts[e.v1];
  g.length = lattice_length(a, b);
  Vec3 step = primitive(b - a);
  for (Int s = 0; s <= g.length; ++s) g.points.push_back(a + s * step);
  const Facet& f0 = p.facets[e.f0];
  const Facet& f1 = p.facets[e.f1];
  g.dual_v0 = {Rat(-f0.normal.x), Rat(-f0.normal.y), Rat(-f0.normal.z)};
  g.dual_v1 = {Rat(-f1.normal.x), Rat(-f1.normal.y), Rat(-f1.normal.z)};
  Vec3 d = f1.normal - f0.normal;
  g.colength = content(d);
  return g;
}

// ------------------------------------------------------------ facet chart

namespace {

// Unimodular V (columns v0,b1,b2) with u.v0 = 1, u.b1 = u.b2 = 0.
// Requires u primitive.
std::array<Vec3, 3> unimodular_complement(Vec3 u) {
  // column operations reducing u to (1,0,0), tracked on the identity
  std::array<Vec3, 3> col = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  std::array<Int, 3> w = {u.x, u.y, u.z};
  auto reduce = [&](int i, int j) {
    // make w[j] = 0 using gcd steps between slots i and j
    while (w[j] != 0) {
      Int q = w[i] / w[j];
      w[i] -= q * w[j];
      col[i] = col[i] - q * col[j];
      std::swap(w[i], w[j]);
      std::swap(col[i], col[j]);
    }
  };
  if (w[0] == 0 && w[1] != 0) { std::swap(w[0], w[1]); std::swap(col[0], col[1]); }
  if (w[0] == 0) { std::swap(w[0], w[2]); std::swap(col[0], col[2]); }
  reduce(0, 1);
  reduce(0, 2);
  if (w[0] < 0) { w[0] = -w[0]; col[0] = Vec3{0, 0, 0} - col[0]; }
  if (w[0] != 1) throw invariant_error("unimodular_complement: u not primitive");
  return col;
}

Vec3 inverse_row(const std::array<Vec3, 3>& col, int r) {
  // row r of the inverse of the matrix with the given columns (det = +-1)
  Vec3 c0 = col[0], c1 = col[1], c2 = col[2];
  Int det = det3(c0, c1, c2);
  Vec3 r0 = cross(c1, c2), r1 = cross(c2, c0), r2 = cross(c0, c1);
  Vec3 row = r == 0 ? r0 : (r == 1 ? r1 : r2);
  if (det == -1) row = Vec3{0, 0, 0} - row;
  else if (det != 1) throw invariant_error("inverse_row: not unimodular");
  return row;
}

}  // namespace

FacetChart facet_chart(const LatticePolytope3& p, int facet) {
  const Facet& f = p.facets[facet];
  if (f.level != 1)
    throw input_error("facet_chart: facet not at lattice distance 1");
  FacetChart ch;
  ch.origin = p.verts[f.verts[0]];
  auto col = unimodular_complement(f.normal);
  ch.b1 = col[1];
  ch.b2 = col[2];
  ch.dual1 = inverse_row(col, 1);
  ch.dual2 = inverse_row(col, 2);
  auto build_polygon = [&]() {
    std::vector<Vec2> cs;
    for (int vi : f.verts) cs.push_back(ch.to_chart(p.verts[vi]));
    return cs;
  };
  auto cs = build_polygon();
  Int area2 = 0;
  int m = static_cast<int>(cs.size());
  for (int i = 0; i < m; ++i) area2 += cross(cs[i], cs[(i + 1) % m]);
  if (area2 < 0) {
    std::swap(ch.b1, ch.b2);
    std::swap(ch.dual1, ch.dual2);
    cs = build_polygon();
  }
  ch.polygon = convex_hull2(cs);
  return ch;
}

// ------------------------------------------------------------ normal form

namespace {

using VList = std::vector<Vec2>;

bool tuple_less(const VList& a, const VList& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Candidates for one CCW polygon: anchor at each vertex, first edge to
// (1,0), then minimize over the shear stabilizer.
void anchored_candidates(const VList& ccw, VList& best, bool& have) {
  int m = static_cast<int>(ccw.size());
  for (int i = 0; i < m; ++i) {
    VList q(m);
    for (int j = 0; j < m; ++j) q[j] = ccw[(i + j) % m] - ccw[i];
    Vec2 u = primitive(q[1]);
    // (c,d) with u.x*d - u.y*c = 1, via extended euclid
    Int c, d;
    {
      Int old_r = u.x, r = u.y, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        Int qq = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - qq * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - qq * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - qq * t);
      }
      Int sign = old_r > 0 ? 1 : -1;  // old_s*u.x + old_t*u.y = old_r = +-1
      d = old_s * sign;
      c = -old_t * sign;
    }
    auto apply0 = [&](Vec2 v) -> Vec2 {
      return {d * v.x - c * v.y, -u.y * v.x + u.x * v.y};
    };
    VList base(m);
    for (int j = 0; j < m; ++j) base[j] = apply0(q[j]);
    // the residual freedom is a shear fixing the x-axis; pin it by
    // reducing the third vertex's x-coordinate modulo its y (positive
    // for a CCW polygon whose first edge lies on the positive x-axis)
    Int y3 = base[2].y, x3 = base[2].x;
    if (y3 <= 0) throw invariant_error("normal form: polygon not CCW");
    Int k = x3 >= 0 ? x3 / y3 : -((-x3 + y3 - 1) / y3);  // floor(x3 / y3)
    VList cand(m);
    for (int j = 0; j < m; ++j)
      cand[j] = {base[j].x - k * base[j].y, base[j].y};
    if (!have || tuple_less(cand, best)) {
      best = cand;
      have = true;
    }
  }
}

}  // namespace

std::vector<Vec2> polygon_normal_form(const std::vector<Vec2>& verts) {
  if (verts.size() == 2) {
    Int len = lattice_length(verts[0], verts[1]);
    return {{0, 0}, {len, 0}};
  }
  LatticePolygon poly = convex_hull2(verts);
  VList mir;
  for (auto v : poly.verts) mir.push_back({v.x, -v.y});
  std::reverse(mir.begin(), mir.end());
  LatticePolygon mpoly{mir};  // still CCW after reversal

  VList best;
  bool have = false;
  anchored_candidates(poly.verts, best, have);
  anchored_candidates(mpoly.verts, best, have);
  return best;
}

}  // namespace fano
