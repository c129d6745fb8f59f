#ifndef FANO_MINKOWSKI_HPP
#define FANO_MINKOWSKI_HPP

#include <optional>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

// A placed A-triangle summand. kind = -1 for a unit segment (2 vertices),
// kind = n >= 0 for an A_n triangle (3 vertices). edge_counts[t] is the
// lattice length of the summand's face on directed edge t of the target
// polygon (0 when that face is a vertex).
struct ATriangle {
  int kind;
  std::vector<Vec2> verts;
  std::vector<Int> edge_counts;
};

struct AdmissibleDecomposition {
  std::vector<ATriangle> summands;  // canonically sorted
  int r() const { return static_cast<int>(summands.size()); }
};

// n >= -1 if the vertex list spells an A-triangle (2 points: unit segment;
// 3 points: A_n), nullopt otherwise.
std::optional<int> classify_a_triangle(const std::vector<Vec2>& verts);

// Complete duplicate-free set of admissible Minkowski decompositions of F.
std::vector<AdmissibleDecomposition> enumerate_admissible_decompositions(
    const LatticePolygon& f);

// Face lengths per summand in the direction of directed edge t of F;
// sums to the lattice length of that edge.
std::vector<Int> edge_face_profile(const AdmissibleDecomposition& d, int t);

// Exact Minkowski sum of the summands, re-hulled; used by callers to verify
// that a decomposition reproduces F up to translation.
LatticePolygon minkowski_sum(const std::vector<std::vector<Vec2>>& polys);

// True iff the summand polygons sum to F up to a single translation.
bool sums_to(const AdmissibleDecomposition& d, const LatticePolygon& f);

}  // namespace fano

#endif
