#ifndef FANO_INVARIANTS_HPP
#define FANO_INVARIANTS_HPP

#include "fano/fan.hpp"

namespace fano {

// A node on the intermediate fiber: edge e of P, segment pair i < j
// (1-based), multiplicity, and the curve class as a functional on ray-value
// assignments (piecewise-linear support functions on the fan of Y).
struct NodeRecord {
  int edge;
  int i, j;
  Int mult;
  RatVec cls;  // indexed by fan rays
};

struct SmoothingInvariants {
  Int n = 0;      // ordinary double points on the intermediate fiber
  Int q = 0;      // qODPs of Y
  Int eY = 0, eYt = 0, eXeta = 0;
  Int picY = 0;   // = b2 of the small resolution Y_t
  Int sigma = 0;  // rank of the span of the node classes
  Int b2 = 0, b3 = 0;
  Int degree = 0;  // (-K)^3 = 6 vol(P*)
  Int h0 = 0;      // lattice points of P*
  Int t1dim = 0;
};

Int t1_dimension(const LatticePolytope3& p, const Amd& a);

// n_e of the node-count formula; cross-checked against the pair
// multiplicities m_ij = k - [same F-part] - [same G-part].
Int node_count_edge(Int l, Int k, const std::vector<int>& fpart,
                    const std::vector<int>& gpart);

std::vector<NodeRecord> node_records(const LatticePolytope3& p, const Amd& a,
                                     const Fan3& y);

// Ray-value assignments extending to a function linear on every maximal
// cone: kernel of one constraint per parallelogram cone. Basis as rows.
RatMat pl_space(const Fan3& y);

Int picard_rank_Y(const Fan3& y);

// Ray-value functions linear on every unrefined facet cone (pullbacks of
// support functions on the spanning fan). Basis as rows over y's rays.
RatMat pullback_space(const LatticePolytope3& p, const Fan3& y);

Int polytope_degree(const LatticePolytope3& p);  // 6 vol(P*)
Int polar_lattice_points(const LatticePolytope3& p);

SmoothingInvariants betti_numbers(const LatticePolytope3& p, const Amd& a);

}  // namespace fano

#endif
