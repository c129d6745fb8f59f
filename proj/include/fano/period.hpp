#ifndef FANO_PERIOD_HPP
#define FANO_PERIOD_HPP

#include <map>

#include "fano/minkowski.hpp"

namespace fano {

using LaurentPoly3 = std::map<Vec3, BigInt>;

// Minkowski polynomial of P for one decomposition choice per facet
// (indexed like p.facets). Coefficient 0 at the origin; per-facet
// coefficients are those of the product of the summand polynomials.
LaurentPoly3 minkowski_polynomial(
    const LatticePolytope3& p,
    const std::vector<AdmissibleDecomposition>& per_facet);

// c_0..c_N with c_m the constant term of w^m.
std::vector<BigInt> classical_period(const LaurentPoly3& w, int n);

}  // namespace fano

#endif
