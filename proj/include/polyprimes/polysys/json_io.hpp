#pragma once

#include "json.hpp"

#include <string>

#include "polyprimes/polysys/family.hpp"
#include "polyprimes/polysys/pet.hpp"

namespace polyprimes::polysys {

using nlohmann::json;

/// Reads and parses a JSON file; failures become ParseError naming the path.
json load_json_file(const std::string& path);

json poly_to_json(const IntPoly& p, std::span<const std::string> names);
IntPoly poly_from_json(const json& terms, std::span<const std::string> names);

/// [{"direction": j (1-based), "terms": [...]}], zero components omitted.
json vec_to_json(const VecPoly& p, std::span<const std::string> names);
VecPoly vec_from_json(const json& components, std::size_t ncomponents, std::span<const std::string> names);

json system_to_json(const ShiftPolySystem& s);
ShiftPolySystem system_from_json(const json& j);

json weight_to_json(const WeightMatrix& w);
WeightMatrix weight_from_json(const json& j);

json certificate_to_json(const LinearizationCertificate& c);
LinearizationCertificate certificate_from_json(const json& j);

/// {"dimension", "directions"?, "parameters", "polynomials": [{"components": [...]}]};
/// omitted directions mean the standard basis.
json family_to_json(const PolyFamily& q);
PolyFamily family_from_json(const json& j);

}  // namespace polyprimes::polysys
