#include "fano/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fano {

Int t1_dimension(const LatticePolytope3& p, const Amd& a) {
  Int t1 = 0;
  for (const auto& fc : a.choices) t1 += fc.decomposition.r();
  for (size_t e = 0; e < p.edges.size(); ++e) {
    EdgeGeometry g = edge_geometry(p, static_cast<int>(e));
    t1 += g.length * (g.colength - 1);
  }
  return t1;
}

namespace {

Int choose2(Int m) { return m * (m - 1) / 2; }

std::map<int, Int> part_sizes(const std::vector<int>& part) {
  std::map<int, Int> sz;
  for (int j : part) sz[j]++;
  return sz;
}

}  // namespace

Int node_count_edge(Int l, Int k, const std::vector<int>& fpart,
                    const std::vector<int>& gpart) {
  if (static_cast<Int>(fpart.size()) != l ||
      static_cast<Int>(gpart.size()) != l)
    throw input_error("node_count_edge: partition length mismatch");
  Int ne = k * choose2(l);
  for (const auto& [j, sz] : part_sizes(fpart)) ne -= choose2(sz);
  for (const auto& [j, sz] : part_sizes(gpart)) ne -= choose2(sz);
  if (ne < 0) throw invariant_error("node_count_edge: matching violated upstream");
  return ne;
}

std::vector<NodeRecord> node_records(const LatticePolytope3& p, const Amd& a,
                                     const Fan3& y) {
  std::map<Vec3, int> ray_index;
  for (size_t r = 0; r < y.rays.size(); ++r)
    ray_index[y.rays[r]] = static_cast<int>(r);

  std::vector<NodeRecord> out;
  for (size_t e = 0; e < p.edges.size(); ++e) {
    EdgeGeometry g = edge_geometry(p, static_cast<int>(e));
    Int l = g.length, k = g.colength;
    if (l < 2) continue;
    const auto& fp = a.choices[p.edges[e].f0].edge_partitions.at(static_cast<int>(e));
    const auto& gp = a.choices[p.edges[e].f1].edge_partitions.at(static_cast<int>(e));
    std::vector<int> pt(l + 1);
    for (Int s = 0; s <= l; ++s) pt[s] = ray_index.at(g.points[s]);
    Int check = 0;
    for (Int i = 1; i <= l; ++i)
      for (Int j = i + 1; j <= l; ++j) {
        Int m = k - (fp[i - 1] == fp[j - 1] ? 1 : 0) -
                (gp[i - 1] == gp[j - 1] ? 1 : 0);
        if (m < 0)
          throw invariant_error("node_records: matching violated upstream");
        check += m;
        if (m == 0) continue;
        NodeRecord rec;
        rec.edge = static_cast<int>(e);
        rec.i = static_cast<int>(i);
        rec.j = static_cast<int>(j);
        rec.mult = m;
        rec.cls.assign(y.rays.size(), Rat(0));
        // telescoped sum of fiber classes phi(p_{s-1}) - 2 phi(p_s) + phi(p_{s+1})
        rec.cls[pt[i - 1]] += 1;
        rec.cls[pt[i]] -= 1;
        rec.cls[pt[j - 1]] -= 1;
        rec.cls[pt[j]] += 1;
        out.push_back(std::move(rec));
      }
    if (check != node_count_edge(l, k, fp, gp))
      throw invariant_error("node_records: n_e formula mismatch");
  }
  return out;
}

namespace {

RatMat parallelogram_constraints(const Fan3& y) {
  RatMat rows;
  for (const auto& c : y.cones) {
    if (c.size() != 4) continue;
    RatVec row(y.rays.size(), Rat(0));
    row[c[0]] += 1;
    row[c[1]] -= 1;
    row[c[2]] += 1;
    row[c[3]] -= 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat identity_basis(size_t n) {
  RatMat b(n, RatVec(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) b[i][i] = 1;
  return b;
}

}  // namespace

RatMat pl_space(const Fan3& y) {
  RatMat rows = parallelogram_constraints(y);
  if (rows.empty()) return identity_basis(y.rays.size());
  std::vector<RatVec> ker = rat_kernel(rows);
  return RatMat(ker.begin(), ker.end());
}

Int picard_rank_Y(const Fan3& y) {
  RatMat rows = parallelogram_constraints(y);
  Int rank = rows.empty() ? 0 : rat_rank(rows);
  return static_cast<Int>(y.rays.size()) - rank - 3;
}

RatMat pullback_space(const LatticePolytope3& p, const Fan3& y) {
  int nf = static_cast<int>(p.facets.size());
  // variables: u_F in Q^3 per facet; agreement on both endpoints of every edge
  RatMat rows;
  for (const auto& e : p.edges) {
    for (int vi : {e.v0, e.v1}) {
      RatVec row(3 * nf, Rat(0));
      Vec3 v = p.verts[vi];
      row[3 * e.f0 + 0] = v.x;
      row[3 * e.f0 + 1] = v.y;
      row[3 * e.f0 + 2] = v.z;
      row[3 * e.f1 + 0] -= v.x;
      row[3 * e.f1 + 1] -= v.y;
      row[3 * e.f1 + 2] -= v.z;
      rows.push_back(std::move(row));
    }
  }
  std::vector<RatVec> ker =
      rows.empty() ? identity_basis(3 * nf) : rat_kernel(rows);

  // facet containing each ray of y
  std::vector<int> facet_of(y.rays.size(), -1);
  for (size_t c = 0; c < y.cones.size(); ++c)
    for (int r : y.cones[c]) facet_of[r] = y.facet_of_cone[c];

  RatMat out;
  for (const auto& u : ker) {
    RatVec phi(y.rays.size());
    for (size_t r = 0; r < y.rays.size(); ++r) {
      int f = facet_of[r];
      if (f < 0) throw invariant_error("pullback_space: unused ray");
      phi[r] = u[3 * f + 0] * y.rays[r].x + u[3 * f + 1] * y.rays[r].y +
               u[3 * f + 2] * y.rays[r].z;
    }
    out.push_back(std::move(phi));
  }
  return out;
}

Int polytope_degree(const LatticePolytope3& p) {
  RationalPolytope3 d = polar_dual(p);
  if (!d.integral()) throw input_error("polytope_degree: P not reflexive");
  LatticePolytope3 star = d.to_lattice();
  Int six_vol = 0;
  for (const auto& f : star.facets)
    for (size_t i = 1; i + 1 < f.verts.size(); ++i) {
      Int det = det3(star.verts[f.verts[0]], star.verts[f.verts[i]],
                     star.verts[f.verts[i + 1]]);
      six_vol += det < 0 ? -det : det;
    }
  return six_vol;
}

Int polar_lattice_points(const LatticePolytope3& p) {
  RationalPolytope3 d = polar_dual(p);
  if (!d.integral()) throw input_error("polar_lattice_points: P not reflexive");
  LatticePolytope3 star = d.to_lattice();
  Int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
  for (const auto& v : star.verts) {
    lo[0] = std::min(lo[0], v.x); hi[0] = std::max(hi[0], v.x);
    lo[1] = std::min(lo[1], v.y); hi[1] = std::max(hi[1], v.y);
    lo[2] = std::min(lo[2], v.z); hi[2] = std::max(hi[2], v.z);
  }
  Int count = 0;
  for (Int x = lo[0]; x <= hi[0]; ++x)
    for (Int yy = lo[1]; yy <= hi[1]; ++yy)
      for (Int z = lo[2]; z <= hi[2]; ++z) {
        bool in = true;
        for (const auto& v : p.verts)
          if (dot(v, Vec3{x, yy, z}) < -1) { in = false; break; }
        if (in) ++count;
      }
  return count;
}

SmoothingInvariants betti_numbers(const LatticePolytope3& p, const Amd& a) {
  Fan3 y = refine_by_amd(p, a);
  SmoothingInvariants inv;
  inv.eY = static_cast<Int>(y.cones.size());
  inv.q = static_cast<Int>(singular_points(y).size());
  inv.eYt = inv.eY - inv.q;
  inv.picY = picard_rank_Y(y);
  Int b3Yt = 2 + 2 * inv.picY - inv.eYt;

  std::vector<NodeRecord> nodes = node_records(p, a, y);
  inv.n = 0;
  for (const auto& r : nodes) inv.n += r.mult;

  // sigma: rank of the distinct node classes restricted to the PL space
  RatMat pl = pl_space(y);
  std::set<RatVec> distinct;
  for (const auto& r : nodes) distinct.insert(r.cls);
  RatMat restricted;
  for (const auto& cls : distinct) {
    RatVec row;
    for (const auto& b : pl) {
      Rat v = 0;
      for (size_t i = 0; i < cls.size(); ++i) v += cls[i] * b[i];
      row.push_back(v);
    }
    restricted.push_back(std::move(row));
  }
  inv.sigma = restricted.empty() ? 0 : rat_rank(restricted);

  inv.b2 = inv.picY - inv.sigma;
  inv.eXeta = inv.eYt - 2 * inv.n;
  inv.b3 = 2 + 2 * inv.b2 - inv.eXeta;
  if (inv.b3 != b3Yt + 2 * (inv.n - inv.sigma) || inv.b3 % 2 != 0 ||
      inv.b3 < 0 || inv.b2 < 0)
    throw invariant_error("betti_numbers: invariant pipeline inconsistent");

  inv.degree = polytope_degree(p);
  inv.h0 = polar_lattice_points(p);
  inv.t1dim = t1_dimension(p, a);
  return inv;
}

}  // namespace fano
