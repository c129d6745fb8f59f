#ifndef FANO_FAN_HPP
#define FANO_FAN_HPP

#include "fano/amd.hpp"

namespace fano {

// Complete fan in N with all maximal cones spanned by rays lying at height 1
// on a facet of P; 4-ray cones are stored in cyclic order.
struct Fan3 {
  std::vector<Vec3> rays;
  std::vector<std::vector<int>> cones;    // maximal cones, 3 or 4 rays
  std::vector<int> facet_of_cone;         // originating facet of P
};

enum class ConeKind { BasicSimplex, UnitParallelogram };

struct ConeClass {
  ConeKind kind;
  Int interior_points = 0;  // lattice points interior to the parallelogram
};

struct SingularPoint {
  int cone;
  Int a;  // qODP index; a = 1 is an ordinary double point
};

Fan3 spanning_fan(const LatticePolytope3& p);
Fan3 refine_by_amd(const LatticePolytope3& p, const Amd& a);
ConeClass classify_cone(const Fan3& f, int cone);
std::vector<SingularPoint> singular_points(const Fan3& f);

}  // namespace fano

#endif
