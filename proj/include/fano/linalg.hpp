#ifndef FANO_LINALG_HPP
#define FANO_LINALG_HPP

#include <optional>
#include <vector>

#include "fano/core.hpp"

namespace fano {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

int rat_rank(RatMat m);

// Any solution of A x = b, or nullopt if inconsistent.
std::optional<RatVec> rat_solve(RatMat a, RatVec b);

// Basis of the right kernel of A (columns = variables).
std::vector<RatVec> rat_kernel(RatMat a);

// Exact two-phase simplex.
//   maximize c.x  subject to  Aeq x = beq,  Ale x <= ble,  x >= 0
// Bland's rule, so it always terminates.
enum class LpStatus { Infeasible, Optimal, Unbounded };
struct LpResult {
  LpStatus status;
  Rat value;
  RatVec x;
};
LpResult lp_solve(const RatMat& aeq, const RatVec& beq, const RatMat& ale,
                  const RatVec& ble, const RatVec& c);

// Feasibility of A x <= b with x free; returns a witness if feasible.
std::optional<RatVec> lp_feasible_free(const RatMat& a, const RatVec& b);

}  // namespace fano

#endif
