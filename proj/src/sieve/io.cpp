#include "polyprimes/sieve/io.hpp"

#include <cstdio>

#include "polyprimes/error.hpp"

namespace polyprimes::sieve {

void write_nu_csv(std::ostream& os, const std::vector<double>& nu) {
  os << "x,nu\n";
  char buf[64];
  for (std::size_t x = 1; x < nu.size(); ++x) {
    std::snprintf(buf, sizeof buf, "%zu,%.12g\n", x, nu[x]);
    os << buf;
  }
}

nlohmann::json context_to_json(const SieveContext& ctx) {
  return {{"N_prime", ctx.n_prime}, {"w", ctx.w},       {"W", ctx.W},     {"phi_W", ctx.phi_W},
          {"N", ctx.N},             {"eps0", ctx.eps0}, {"R", ctx.R},     {"c0", ctx.c0},
          {"chi", chi_kind_name(ctx.chi_kind)},         {"b", ctx.b}};
}

SieveContext context_from_json(const nlohmann::json& j) {
  try {
    SieveContext ctx = make_context(j.at("N_prime").get<std::int64_t>(), j.at("eps0").get<double>(),
                                    j.at("w").get<int>(), j.at("c0").get<double>());
    ctx.chi_kind = parse_chi_kind(j.value("chi", std::string("cosine")));
    auto b = j.value("b", std::vector<std::int64_t>{});
    if (!b.empty()) set_residues(ctx, std::move(b));
    return ctx;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("sieve context: ") + e.what());
  }
}

}  // namespace polyprimes::sieve
