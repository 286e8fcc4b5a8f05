#pragma once

#include <ostream>
#include <vector>

#include "json.hpp"
#include "polyprimes/search/search.hpp"

namespace polyprimes::search {

// {"dimension", "polynomials": [[c0, c1, ...], ...] (coefficient of y^k at k),
//  "directions", "N", "y_max", "cyclic"?,
//  "target": {"kind": "primes"} | {"kind": "residue", "modulus", "residue"}
//          | {"kind": "axis_set", "members": [...]} (product of one axis set)
//          | {"kind": "points", "points": [[...], ...]}}
ConfigurationQuery query_from_json(const nlohmann::json& j);
nlohmann::json query_to_json(const ConfigurationQuery& q);

// Header y,x1..xd,p0_1..p0_d,...,pl_d.
void write_hits_csv(std::ostream& os, const ConfigurationQuery& q, const std::vector<ConfigurationHit>& hits);
nlohmann::json hits_to_json(const std::vector<ConfigurationHit>& hits);

}  // namespace polyprimes::search
