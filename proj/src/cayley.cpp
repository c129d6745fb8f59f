#include "fano/cayley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace fano {

namespace {

std::vector<Vec2> summand_lattice_points(const ATriangle& t) {
  if (t.kind == -1) return t.verts;
  LatticePolygon tri = convex_hull2(t.verts);
  return tri.lattice_points();
}

}  // namespace

CayleyConfig cayley_configuration(const AdmissibleDecomposition& d) {
  CayleyConfig cfg;
  cfg.k = d.r();
  for (int j = 0; j < cfg.k; ++j)
    for (Vec2 p : summand_lattice_points(d.summands[j]))
      cfg.pts.push_back({p, j});
  for (const auto& pt : cfg.pts) {
    std::vector<Int> c(2 + cfg.k - 1, 0);
    c[0] = pt.chart.x;
    c[1] = pt.chart.y;
    if (pt.label > 0) c[1 + pt.label] = 1;
    cfg.coords.push_back(std::move(c));
  }
  return cfg;
}

// --------------------------------------------------------------- geometry

namespace {

using IPts = std::vector<std::vector<Int>>;

int affine_rank(const IPts& pts) {
  if (pts.size() <= 1) return 0;
  RatMat m;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec row;
    for (size_t j = 0; j < pts[0].size(); ++j)
      row.push_back(Rat(pts[i][j] - pts[0][j]));
    m.push_back(std::move(row));
  }
  return rat_rank(m);
}

// barycentric coordinates of every point with respect to the subset S
// (affinely independent, spanning the configuration's affine hull);
// bary[p][i] solves p = sum_i bary[p][i] * pts[S[i]], sum = 1.
RatMat barycentric_table(const IPts& pts, const std::vector<int>& s) {
  size_t dim = pts[0].size();
  RatMat a(dim + 1, RatVec(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    for (size_t j = 0; j < dim; ++j) a[j][i] = Rat(pts[s[i]][j]);
    a[dim][i] = 1;
  }
  RatMat bary;
  for (const auto& p : pts) {
    RatVec b;
    for (size_t j = 0; j < dim; ++j) b.push_back(Rat(p[j]));
    b.push_back(1);
    auto sol = rat_solve(a, b);
    if (!sol) throw invariant_error("barycentric_table: point outside hull");
    bary.push_back(std::move(*sol));
  }
  return bary;
}

bool affinely_independent(const IPts& pts, const std::vector<int>& s) {
  RatMat m;
  for (size_t i = 1; i < s.size(); ++i) {
    RatVec row;
    for (size_t j = 0; j < pts[0].size(); ++j)
      row.push_back(Rat(pts[s[i]][j] - pts[s[0]][j]));
    m.push_back(std::move(row));
  }
  return rat_rank(m) == static_cast<int>(s.size()) - 1;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == k) {
      fn(idx);
      return;
    }
    for (int i = start; i <= n - (k - pos); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

BigInt int_det(std::vector<std::vector<BigInt>> m) {
  int n = static_cast<int>(m.size());
  BigInt det = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != k) { std::swap(m[p], m[k]); det = -det; }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return det < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

Cells regular_subdivision(const IPts& points, const RatVec& heights) {
  int n = static_cast<int>(points.size());
  if (n == 0) return {};
  int d = affine_rank(points);
  std::set<std::vector<int>> cells;
  for_each_subset(n, d + 1, [&](const std::vector<int>& s) {
    if (!affinely_independent(points, s)) return;
    RatMat bary = barycentric_table(points, s);
    std::vector<int> cell;
    for (int p = 0; p < n; ++p) {
      Rat psi = 0;
      for (size_t i = 0; i < s.size(); ++i) psi += bary[p][i] * heights[s[i]];
      if (psi > heights[p]) return;  // not supporting
      if (psi == heights[p]) cell.push_back(p);
    }
    cells.insert(std::move(cell));
  });
  return Cells(cells.begin(), cells.end());
}

std::optional<RatVec> is_regular(const IPts& points, const Triangulation& t) {
  int n = static_cast<int>(points.size());
  RatMat a;
  RatVec b;
  for (const auto& cell : t.cells) {
    RatMat bary = barycentric_table(points, cell);
    for (int p = 0; p < n; ++p) {
      if (std::find(cell.begin(), cell.end(), p) != cell.end()) continue;
      RatVec row(n, 0);
      for (size_t i = 0; i < cell.size(); ++i) row[cell[i]] += bary[p][i];
      row[p] -= 1;
      a.push_back(std::move(row));
      b.push_back(-1);
    }
  }
  return lp_feasible_free(a, b);
}

// ----------------------------------------------- fine triangulation search

namespace {

struct Candidate {
  std::vector<int> idx;  // d+1 point indices, sorted
  RatMat bary;           // barycentric coords of every point
  BigInt vol;            // |det| of edge vectors, normalized volume
  RatVec witness;        // a generic interior point
};

BigInt simplex_volume(const IPts& pts, const std::vector<int>& s) {
  int d = static_cast<int>(s.size()) - 1;
  std::vector<std::vector<BigInt>> m(d, std::vector<BigInt>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m[i][j] = BigInt(pts[s[i + 1]][j] - pts[s[0]][j]);
  BigInt v = int_det(std::move(m));
  return v < 0 ? -v : v;
}

// interiors of two candidate simplices intersect?
bool interiors_overlap(const IPts& pts, const Candidate& s,
                       const Candidate& t) {
  size_t dim = pts[0].size();
  int ns = static_cast<int>(s.idx.size()), nt = static_cast<int>(t.idx.size());
  int nv = ns + nt + 1;  // lambdas, mus, eps
  RatMat aeq;
  RatVec beq;
  for (size_t j = 0; j < dim; ++j) {
    RatVec row(nv, 0);
    for (int i = 0; i < ns; ++i) row[i] = Rat(pts[s.idx[i]][j]);
    for (int i = 0; i < nt; ++i) row[ns + i] = Rat(-pts[t.idx[i]][j]);
    aeq.push_back(std::move(row));
    beq.push_back(0);
  }
  RatVec sum1(nv, 0), sum2(nv, 0);
  for (int i = 0; i < ns; ++i) sum1[i] = 1;
  for (int i = 0; i < nt; ++i) sum2[ns + i] = 1;
  aeq.push_back(sum1);
  beq.push_back(1);
  aeq.push_back(sum2);
  beq.push_back(1);
  RatMat ale;
  RatVec ble;
  for (int i = 0; i < ns + nt; ++i) {
    RatVec row(nv, 0);
    row[nv - 1] = 1;
    row[i] = -1;
    ale.push_back(std::move(row));
    ble.push_back(0);
  }
  RatVec c(nv, 0);
  c[nv - 1] = 1;
  auto res = lp_solve(aeq, beq, ale, ble, c);
  return res.status == LpStatus::Optimal && res.value > 0;
}

// common-face compatibility: max over S cap T of the barycentric mass of
// S's non-shared vertices must be zero (or the intersection empty).
bool compatible(const IPts& pts, const Candidate& s, const Candidate& t) {
  size_t dim = pts[0].size();
  std::set<int> shared(s.idx.begin(), s.idx.end());
  int ns = static_cast<int>(s.idx.size()), nt = static_cast<int>(t.idx.size());
  int nv = ns + nt;
  RatMat aeq;
  RatVec beq;
  for (size_t j = 0; j < dim; ++j) {
    RatVec row(nv, 0);
    for (int i = 0; i < ns; ++i) row[i] = Rat(pts[s.idx[i]][j]);
    for (int i = 0; i < nt; ++i) row[ns + i] = Rat(-pts[t.idx[i]][j]);
    aeq.push_back(std::move(row));
    beq.push_back(0);
  }
  RatVec sum1(nv, 0), sum2(nv, 0);
  for (int i = 0; i < ns; ++i) sum1[i] = 1;
  for (int i = 0; i < nt; ++i) sum2[ns + i] = 1;
  aeq.push_back(sum1);
  beq.push_back(1);
  aeq.push_back(sum2);
  beq.push_back(1);
  RatVec c(nv, 0);
  bool any = false;
  for (int i = 0; i < ns; ++i)
    if (!std::count(t.idx.begin(), t.idx.end(), s.idx[i])) {
      c[i] = 1;
      any = true;
    }
  if (!any) return false;  // identical vertex sets but different simplices
  auto res = lp_solve(aeq, beq, {}, {}, c);
  if (res.status == LpStatus::Infeasible) return true;  // disjoint
  return res.value == 0;
}

}  // namespace

std::vector<Triangulation> enumerate_fine_triangulations(const IPts& points) {
  int n = static_cast<int>(points.size());
  size_t dim = points[0].size();
  int d = affine_rank(points);
  if (d != static_cast<int>(dim))
    throw invariant_error("enumerate_fine_triangulations: not full rank");

  // empty full-dimensional simplices
  std::vector<Candidate> cand;
  for_each_subset(n, d + 1, [&](const std::vector<int>& s) {
    if (!affinely_independent(points, s)) return;
    RatMat bary = barycentric_table(points, s);
    for (int p = 0; p < n; ++p) {
      if (std::count(s.begin(), s.end(), p)) continue;
      bool inside = true;
      for (const Rat& b : bary[p])
        if (b < 0) { inside = false; break; }
      if (inside) return;  // not empty
    }
    Candidate c;
    c.idx = s;
    c.bary = std::move(bary);
    c.vol = simplex_volume(points, s);
    // deterministic generic interior point: geometrically decaying weights
    Rat wsum = 0, w = 1;
    RatVec ws;
    for (size_t i = 0; i < s.size(); ++i) {
      ws.push_back(w);
      wsum += w;
      w /= 65537;
    }
    c.witness.assign(dim, 0);
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = 0; j < dim; ++j)
        c.witness[j] += ws[i] / wsum * Rat(points[s[i]][j]);
    cand.push_back(std::move(c));
  });

  // total volume from a generic regular triangulation
  BigInt total = 0;
  {
    std::mt19937_64 rng(0xfa90c0de);
    for (int attempt = 0; attempt < 64; ++attempt) {
      RatVec h(n);
      for (int i = 0; i < n; ++i)
        h[i] = Rat(static_cast<Int>(rng() % 1000003));
      Cells cells = regular_subdivision(points, h);
      bool simplicial = true;
      for (const auto& c : cells)
        if (static_cast<int>(c.size()) != d + 1) { simplicial = false; break; }
      if (!simplicial) continue;
      for (const auto& c : cells) total += simplex_volume(points, c);
      break;
    }
    if (total == 0)
      throw invariant_error("enumerate_fine_triangulations: no seed volume");
  }

  // memoized pairwise compatibility
  std::map<std::pair<int, int>, bool> compat;
  auto is_compat = [&](int i, int j) {
    auto key = std::minmax(i, j);
    auto it = compat.find(key);
    if (it != compat.end()) return it->second;
    bool ok = compatible(points, cand[key.first], cand[key.second]);
    compat[key] = ok;
    return ok;
  };
  std::map<std::pair<int, int>, bool> overlap;
  auto overlaps = [&](int i, int j) {
    auto key = std::minmax(i, j);
    auto it = overlap.find(key);
    if (it != overlap.end()) return it->second;
    bool ov = interiors_overlap(points, cand[key.first], cand[key.second]);
    overlap[key] = ov;
    return ov;
  };

  std::set<Cells> found;
  std::vector<int> chosen;
  BigInt covered = 0;

  // does candidate c contain the witness of candidate w (closed simplex)?
  auto contains_witness = [&](int ci, const RatVec& w) {
    const Candidate& c = cand[ci];
    RatMat a(dim + 1, RatVec(c.idx.size()));
    for (size_t i = 0; i < c.idx.size(); ++i) {
      for (size_t j = 0; j < dim; ++j) a[j][i] = Rat(points[c.idx[i]][j]);
      a[dim][i] = 1;
    }
    RatVec b = w;
    b.push_back(1);
    auto sol = rat_solve(a, b);
    if (!sol) return false;
    for (const Rat& x : *sol)
      if (x < 0) return false;
    return true;
  };

  std::function<void()> rec = [&]() {
    if (covered == total) {
      Cells cells;
      for (int ci : chosen) cells.push_back(cand[ci].idx);
      std::sort(cells.begin(), cells.end());
      found.insert(std::move(cells));
      return;
    }
    // first candidate whose interior misses everything chosen
    int star = -1;
    for (int ci = 0; ci < static_cast<int>(cand.size()); ++ci) {
      bool free = true;
      for (int cj : chosen)
        if (overlaps(ci, cj)) { free = false; break; }
      if (free) { star = ci; break; }
    }
    if (star < 0) return;  // cannot be completed
    const RatVec& w = cand[star].witness;
    for (int ci = 0; ci < static_cast<int>(cand.size()); ++ci) {
      if (!contains_witness(ci, w)) continue;
      bool ok = true;
      for (int cj : chosen)
        if (!is_compat(ci, cj)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(ci);
      covered += cand[ci].vol;
      rec();
      covered -= cand[ci].vol;
      chosen.pop_back();
    }
  };
  rec();

  std::vector<Triangulation> out;
  for (const auto& cells : found) out.push_back(Triangulation{cells});
  return out;
}

// ------------------------------------------------------- mixed subdivision

bool MixedCell::parallelogram() const { return cell.size() == 4; }

std::vector<FineMixedSubdivision> enumerate_fine_coherent_subdivisions(
    const AdmissibleDecomposition& d) {
  CayleyConfig cfg = cayley_configuration(d);
  std::vector<Vec2> f_points;
  {
    std::vector<std::vector<Vec2>> vv;
    for (const auto& t : d.summands) vv.push_back(t.verts);
    f_points = minkowski_sum(vv).lattice_points();
  }
  std::vector<FineMixedSubdivision> out;
  for (const auto& tri : enumerate_fine_triangulations(cfg.coords)) {
    if (!is_regular(cfg.coords, tri)) continue;
    FineMixedSubdivision s;
    s.tri = tri;
    std::set<Vec2> used;
    for (const auto& cell : tri.cells) {
      MixedCell mc;
      mc.summand_faces.assign(cfg.k, {});
      for (int p : cell) mc.summand_faces[cfg.pts[p].label].push_back(cfg.pts[p].chart);
      std::vector<Vec2> sums = {{0, 0}};
      for (const auto& face : mc.summand_faces) {
        if (face.empty())
          throw invariant_error("mixed cell with a missing summand face");
        std::vector<Vec2> next;
        for (auto u : sums)
          for (auto v : face) next.push_back(u + v);
        sums = std::move(next);
      }
      mc.cell = convex_hull2(sums).verts;
      for (auto v : mc.cell) used.insert(v);
      s.cells.push_back(std::move(mc));
    }
    // genericity of the dual arrangement = fineness of the induced
    // subdivision: every lattice point of F must be a vertex of a cell
    bool fine = true;
    for (auto p : f_points)
      if (!used.count(p)) { fine = false; break; }
    if (!fine) continue;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<Vec2>> induced_subdivision_of_F(
    const FineMixedSubdivision& s, const LatticePolygon& f) {
  std::set<Vec2> used;
  std::vector<std::vector<Vec2>> cells;
  for (const auto& mc : s.cells) {
    cells.push_back(mc.cell);
    for (auto v : mc.cell) used.insert(v);
  }
  for (auto p : f.lattice_points())
    if (!used.count(p))
      throw invariant_error("induced subdivision is not fine");
  return cells;
}

std::vector<int> induced_edge_partition(const FineMixedSubdivision& s,
                                        const LatticePolygon& f, int t) {
  Vec2 a0 = f.vertex(t);
  Vec2 dir = f.edge_dir(t);
  Int len = f.edge_len(t);
  Vec2 eta{dir.y, -dir.x};  // outward normal of a CCW polygon edge
  std::vector<int> assign;
  for (Int seg = 1; seg <= len; ++seg) {
    Vec2 a = a0 + (seg - 1) * dir;
    Vec2 b = a0 + seg * dir;
    Vec2 mid2 = a + b;  // doubled midpoint stays integral
    const MixedCell* owner = nullptr;
    for (const auto& mc : s.cells) {
      int m = static_cast<int>(mc.cell.size());
      bool in = true;
      for (int i = 0; i < m && in; ++i) {
        Vec2 u = mc.cell[i], v = mc.cell[(i + 1) % m];
        // doubled-coordinate containment test
        Vec2 du = v - u;
        Vec2 dp{mid2.x - 2 * u.x, mid2.y - 2 * u.y};
        if (cross(du, dp) < 0) in = false;
      }
      if (!in) continue;
      if (owner) throw invariant_error("boundary segment in two cells");
      owner = &mc;
    }
    if (!owner) throw invariant_error("boundary segment not covered");
    int who = -1;
    for (size_t j = 0; j < owner->summand_faces.size(); ++j) {
      const auto& face = owner->summand_faces[j];
      Int best = dot(eta, face[0]);
      int count = 1;
      for (size_t i = 1; i < face.size(); ++i) {
        Int v = dot(eta, face[i]);
        if (v > best) { best = v; count = 1; }
        else if (v == best) ++count;
      }
      if (count >= 2) {
        if (who >= 0)
          throw invariant_error("two summands contribute one segment");
        who = static_cast<int>(j);
      }
    }
    if (who < 0) throw invariant_error("no summand contributes a segment");
    assign.push_back(who);
  }
  return assign;
}

}  // namespace fano
