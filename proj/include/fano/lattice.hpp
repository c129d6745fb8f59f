#ifndef FANO_LATTICE_HPP
#define FANO_LATTICE_HPP

#include <array>
#include <optional>
#include <vector>

#include "fano/core.hpp"

namespace fano {

// Counterclockwise lattice polygon; vertices are exactly the hull vertices,
// with the lexicographically smallest vertex first.
struct LatticePolygon {
  std::vector<Vec2> verts;

  int size() const { return static_cast<int>(verts.size()); }
  Vec2 vertex(int i) const { return verts[((i % size()) + size()) % size()]; }
  // directed edge i: vertex(i) -> vertex(i+1)
  Vec2 edge_dir(int i) const { return primitive(vertex(i + 1) - vertex(i)); }
  Int edge_len(int i) const { return lattice_length(vertex(i), vertex(i + 1)); }
  Int twice_area() const;
  std::vector<Vec2> lattice_points() const;   // all points, boundary included
  std::vector<Vec2> boundary_points() const;  // in cyclic order, no repeats
  bool contains(Vec2 p) const;
};

// Hull of 2d points. Throws input_error on degenerate (dim < 2) input.
LatticePolygon convex_hull2(std::vector<Vec2> pts);
// Variant that also accepts segments and single points (as a vertex list).
std::vector<Vec2> hull2_allow_degenerate(std::vector<Vec2> pts);

struct Facet {
  Vec3 normal;             // primitive outer normal u
  Int level;               // <u, v> = level on the facet, < level elsewhere
  std::vector<int> verts;  // cyclic, counterclockwise seen from outside
};

struct Edge {
  int v0, v1;  // v0 lexicographically smaller
  int f0, f1;  // incident facets
};

struct LatticePolytope3 {
  std::vector<Vec3> verts;
  std::vector<Facet> facets;
  std::vector<Edge> edges;

  int facet_of_edge_other_than(int e, int f) const {
    return edges[e].f0 == f ? edges[e].f1 : edges[e].f0;
  }
  bool origin_interior() const;
  std::vector<Vec3> boundary_lattice_points() const;
};

LatticePolytope3 convex_hull3(std::vector<Vec3> pts);

struct RVec3 {
  Rat x, y, z;
  friend bool operator==(const RVec3& a, const RVec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

// Polar dual with the dual face lattice recorded through index pairings:
// vertex i of the polar corresponds to facet i of P, facet j of the polar to
// vertex j of P, and edge k of the polar to edge k of P.
struct RationalPolytope3 {
  std::vector<RVec3> verts;
  std::vector<std::vector<int>> facets;         // vertex-index sets
  std::vector<std::pair<int, int>> edges;       // vertex-index pairs
  bool integral() const;
  LatticePolytope3 to_lattice() const;          // requires integral()
};

RationalPolytope3 polar_dual(const LatticePolytope3& p);
bool is_reflexive(const LatticePolytope3& p);

struct EdgeGeometry {
  int edge;
  Int length;    // ell_e
  Int colength;  // k_e
  std::vector<Vec3> points;  // p_0 .. p_ell, p_0 the lex-smaller endpoint
  RVec3 dual_v0, dual_v1;    // endpoints of the dual edge in P*
};

EdgeGeometry edge_geometry(const LatticePolytope3& p, int edge);

// Unimodular chart of a reflexive facet: maps the rank-2 lattice of the facet
// plane to Z^2 and back. to_chart/from_chart are mutually inverse affine
// lattice isomorphisms on the facet plane <u, x> = 1.
struct FacetChart {
  Vec3 origin;     // a lattice point with <u, origin> = 1
  Vec3 b1, b2;     // basis of ker(u), oriented so the chart polygon is CCW
  Vec3 dual1, dual2;  // rows of the inverse: chart(w) = (dual1.(w-o), dual2.(w-o))
  LatticePolygon polygon;  // the facet in chart coordinates

  Vec2 to_chart(Vec3 w) const {
    Vec3 d = w - origin;
    return {dot(dual1, d), dot(dual2, d)};
  }
  Vec3 from_chart(Vec2 c) const { return origin + c.x * b1 + c.y * b2; }
};

FacetChart facet_chart(const LatticePolytope3& p, int facet);

// Canonical representative under Z^2 x| GL2(Z). Accepts polygons and
// segments (two-point input).
std::vector<Vec2> polygon_normal_form(const std::vector<Vec2>& verts);

}  // namespace fano

#endif
