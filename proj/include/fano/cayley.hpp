#ifndef FANO_CAYLEY_HPP
#define FANO_CAYLEY_HPP

#include <optional>
#include <vector>

#include "fano/linalg.hpp"
#include "fano/minkowski.hpp"

namespace fano {

// Labeled point configuration of the Cayley construction. Points live in
// Z^(2+k-1): chart coordinates followed by indicator coordinates for labels
// 1..k-1 (label 0 is the affine origin of the simplex factor).
struct CayleyConfig {
  int k = 0;  // number of summands
  struct Pt {
    Vec2 chart;
    int label;
  };
  std::vector<Pt> pts;
  std::vector<std::vector<Int>> coords;  // embedded integer coordinates
  int dim() const { return k + 1; }      // affine dimension, full rank here
};

CayleyConfig cayley_configuration(const AdmissibleDecomposition& d);

// Cells of a polyhedral subdivision, each a set of point indices.
using Cells = std::vector<std::vector<int>>;

struct Triangulation {
  Cells cells;  // sorted cells, sorted list: the canonical form
  bool operator<(const Triangulation& o) const { return cells < o.cells; }
  bool operator==(const Triangulation& o) const { return cells == o.cells; }
};

// Maximal cells of the lower-hull (regular) subdivision of arbitrary
// integer points under the given heights. Handles affinely degenerate
// configurations; deterministic.
Cells regular_subdivision(const std::vector<std::vector<Int>>& points,
                          const RatVec& heights);

// A height witness certifying t regular (strict support on every cell), or
// nullopt. t must cover the configuration.
std::optional<RatVec> is_regular(const std::vector<std::vector<Int>>& points,
                                 const Triangulation& t);

// All fine triangulations of the configuration (complete enumeration).
std::vector<Triangulation> enumerate_fine_triangulations(
    const std::vector<std::vector<Int>>& points);

struct MixedCell {
  std::vector<Vec2> cell;                        // CCW polygon in the chart
  std::vector<std::vector<Vec2>> summand_faces;  // per summand, 1..3 points
  bool parallelogram() const;
};

struct FineMixedSubdivision {
  std::vector<MixedCell> cells;
  Triangulation tri;  // provenance
};

// All coherent fine mixed subdivisions of F subordinated to d, one per
// regular fine triangulation of the Cayley polytope.
std::vector<FineMixedSubdivision> enumerate_fine_coherent_subdivisions(
    const AdmissibleDecomposition& d);

// The 2-cells of the induced subdivision of F, with a fineness check
// against the lattice points of F.
std::vector<std::vector<Vec2>> induced_subdivision_of_F(
    const FineMixedSubdivision& s, const LatticePolygon& f);

// For directed edge t of F with ordered lattice points q_0..q_l, assigns
// each unit segment (1-based index) the summand whose face contributes it.
std::vector<int> induced_edge_partition(const FineMixedSubdivision& s,
                                        const LatticePolygon& f, int t);

}  // namespace fano

#endif
