#pragma once

#include <ostream>
#include <vector>

#include "json.hpp"
#include "polyprimes/sieve/context.hpp"

namespace polyprimes::sieve {

// Columns x,nu for x in [1, N]; values with 12 significant digits.
void write_nu_csv(std::ostream& os, const std::vector<double>& nu);

nlohmann::json context_to_json(const SieveContext& ctx);
SieveContext context_from_json(const nlohmann::json& j);

}  // namespace polyprimes::sieve
