#ifndef FANO_IO_HPP
#define FANO_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fano/invariants.hpp"
#include "fano/period.hpp"

namespace fano {

struct NamedPolytope {
  std::string id;
  LatticePolytope3 poly;
};

// Text format: first line "3 <n>", then 3 lines of n integers; columns are
// vertices. Throws input_error with the offending line number.
LatticePolytope3 parse_polytope_text(std::istream& in);

NamedPolytope parse_polytope_json(const nlohmann::json& j);

// format: "text" | "json" | "batch-json"
std::vector<NamedPolytope> read_polytopes(const std::string& path,
                                          const std::string& format);

nlohmann::json subdivision_json(const FacetChoice& fc);
nlohmann::json amd_json(const Amd& a, const MatchReport& rep);
nlohmann::json invariants_json(const SmoothingInvariants& inv);
nlohmann::json fan_json(const Fan3& f);
nlohmann::json poly_json(const LaurentPoly3& w);
nlohmann::json bigint_json(const BigInt& v);  // number when it fits, else string

std::string amd_digest(const Amd& a);

}  // namespace fano

#endif
