#include "fano/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fano {

Fan3 spanning_fan(const LatticePolytope3& p) {
  Fan3 fan;
  fan.rays = p.verts;
  for (size_t f = 0; f < p.facets.size(); ++f) {
    fan.cones.push_back(p.facets[f].verts);
    fan.facet_of_cone.push_back(static_cast<int>(f));
  }
  return fan;
}

Fan3 refine_by_amd(const LatticePolytope3& p, const Amd& a) {
  Fan3 fan;
  std::map<Vec3, int> ray_index;
  auto ray = [&](Vec3 v) {
    auto [it, fresh] = ray_index.try_emplace(v, static_cast<int>(fan.rays.size()));
    if (fresh) fan.rays.push_back(v);
    return it->second;
  };

  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    FacetChart ch = facet_chart(p, static_cast<int>(fi));
    for (const auto& mc : a.choices[fi].subdivision.cells) {
      std::vector<int> cone;
      for (auto v : mc.cell) cone.push_back(ray(ch.from_chart(v)));
      fan.cones.push_back(std::move(cone));
      fan.facet_of_cone.push_back(static_cast<int>(fi));
    }
  }

  // defensive gluing check: from each incident facet, every unit segment of
  // every edge of P is an edge of exactly one of that facet's cones
  for (size_t e = 0; e < p.edges.size(); ++e) {
    EdgeGeometry g = edge_geometry(p, static_cast<int>(e));
    for (int side : {p.edges[e].f0, p.edges[e].f1}) {
      for (Int s = 0; s + 1 <= g.length; ++s) {
        auto i0 = ray_index.find(g.points[s]);
        auto i1 = ray_index.find(g.points[s + 1]);
        int hits = 0;
        if (i0 != ray_index.end() && i1 != ray_index.end()) {
          for (size_t c = 0; c < fan.cones.size(); ++c) {
            if (fan.facet_of_cone[c] != side) continue;
            const auto& cone = fan.cones[c];
            if (std::count(cone.begin(), cone.end(), i0->second) &&
                std::count(cone.begin(), cone.end(), i1->second))
              ++hits;
          }
        }
        if (hits != 1)
          throw invariant_error("refine_by_amd: inconsistent edge gluing");
      }
    }
  }

  // fineness of the subdivisions makes every boundary lattice point a ray
  if (fan.rays.size() != p.boundary_lattice_points().size())
    throw invariant_error("refine_by_amd: rays != boundary lattice points");
  return fan;
}

ConeClass classify_cone(const Fan3& f, int cone) {
  const auto& c = f.cones[cone];
  if (c.size() == 3) {
    Int d = det3(f.rays[c[0]], f.rays[c[1]], f.rays[c[2]]);
    if (d == 1 || d == -1) return {ConeKind::BasicSimplex, 0};
    throw invariant_error("classify_cone: non-basic simplicial cone");
  }
  if (c.size() != 4) throw invariant_error("classify_cone: bad cone size");
  Vec3 v0 = f.rays[c[0]], v1 = f.rays[c[1]], v2 = f.rays[c[2]],
       v3 = f.rays[c[3]];
  if (v0 + v2 != v1 + v3)
    throw invariant_error("classify_cone: 4-cone is not a parallelogram");
  Vec3 u = v1 - v0, w = v3 - v0;
  if (content(u) != 1 || content(w) != 1)
    throw invariant_error("classify_cone: parallelogram edge not unit");
  // lattice area of the parallelogram inside its plane; Pick with 4
  // boundary points gives interior = area - 1
  Int area = content(cross(u, w));
  return {ConeKind::UnitParallelogram, area - 1};
}

std::vector<SingularPoint> singular_points(const Fan3& f) {
  std::vector<SingularPoint> out;
  for (size_t c = 0; c < f.cones.size(); ++c) {
    ConeClass cc = classify_cone(f, static_cast<int>(c));
    if (cc.kind == ConeKind::UnitParallelogram)
      out.push_back({static_cast<int>(c), cc.interior_points + 1});
  }
  return out;
}

}  // namespace fano
