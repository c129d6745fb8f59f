#ifndef FANO_AMD_HPP
#define FANO_AMD_HPP

#include <functional>
#include <map>

#include "fano/cayley.hpp"

namespace fano {

// Per-facet choice of an admissible decomposition and a coherent fine mixed
// subdivision, with induced partitions re-indexed to the global segment
// order of every incident edge (p_0.., p_0 the lex-smaller endpoint).
struct FacetChoice {
  int facet = -1;
  AdmissibleDecomposition decomposition;
  FineMixedSubdivision subdivision;
  std::map<int, std::vector<int>> edge_partitions;  // edge id -> seg -> summand
};

struct Amd {
  std::vector<FacetChoice> choices;  // indexed by facet id
};

struct MatchReport {
  struct EdgeResult {
    int edge;
    bool pass;
    std::pair<int, int> violating_segments;  // 1-based, valid when !pass
  };
  std::vector<EdgeResult> edges;  // dull edges only
  bool pass = true;
};

// Edges of P with colength k_e = 1.
std::vector<int> dull_edges(const LatticePolytope3& p);

// Both partitions given as segment -> part labels over the common global
// indexing of the ell_e unit segments. Throws input_error on length mismatch.
bool matching_condition(const std::vector<int>& fpart,
                        const std::vector<int>& gpart);

// Independent post-hoc verification of an amd at every dull edge.
MatchReport verify_matching(const LatticePolytope3& p, const Amd& a);

struct AmdOptions {
  long long limit = 0;  // 0 = unlimited
  bool count_only = false;
  bool dedup_by_invariants = false;
  bool strict_all_edges = false;  // require matching at every edge
};

// Streams amd through the callback (return false to stop); returns the
// number emitted. Exhaustive and deterministic.
long long enumerate_amd(const LatticePolytope3& p, const AmdOptions& opt,
                        const std::function<bool(const Amd&)>& emit);

bool amd_exists(const LatticePolytope3& p);

}  // namespace fano

#endif
