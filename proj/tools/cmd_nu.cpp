#include <cmath>
#include <fstream>
#include <iostream>

#include "cli_common.hpp"
#include "polyprimes/polysys/json_io.hpp"
#include "polyprimes/sieve/correlation.hpp"
#include "polyprimes/sieve/io.hpp"
#include "polyprimes/sieve/majorant.hpp"

namespace polyprimes::cli {

namespace {

// Flags shared by every nu subcommand.
struct SieveFlags {
  std::int64_t n_prime = 100000;
  double eps0 = 0.1;
  int w = 0;  // 0: formula
  double c0 = 0.0;  // 0: eps0 / 10
  std::string b = "1";
  std::string chi = "cosine";
  std::string prime_cache;

  void add(CLI::App* sub) {
    sub->add_option("--N", n_prime, "N', the range of the primes");
    sub->add_option("--eps0", eps0, "truncation exponent, R = N'^eps0");
    sub->add_option("--w", w, "override w (W = product of primes <= w)");
    sub->add_option("--c0", c0, "override c0");
    sub->add_option("--b", b, "residues mod W, comma separated, one per axis");
    sub->add_option("--chi", chi, "cutoff: cosine or bump");
    sub->add_option("--prime-cache", prime_cache, "binary prime table cache file");
  }

  sieve::SieveContext context() const {
    auto ctx = sieve::make_context(n_prime, eps0, w > 0 ? std::optional<int>(w) : std::nullopt,
                                   c0 > 0 ? std::optional<double>(c0) : std::nullopt);
    ctx.chi_kind = sieve::parse_chi_kind(chi);
    sieve::set_residues(ctx, parse_int_list(b));
    return ctx;
  }

  sieve::PrimeTable table(const sieve::SieveContext& ctx) const {
    const std::int64_t limit = std::max<std::int64_t>(ctx.max_value(), 2);
    return prime_cache.empty() ? sieve::build_prime_table(limit) : sieve::cached_prime_table(limit, prime_cache);
  }
};

double mean(const std::vector<double>& nu) {
  double s = 0.0;
  for (std::size_t x = 1; x < nu.size(); ++x) s += nu[x];
  return s / static_cast<double>(nu.size() - 1);
}

}  // namespace

void add_nu_commands(CLI::App& app, Registry& reg) {
  auto* nu = app.add_subcommand("nu", "Pseudo-random majorant and its correlation checks");
  nu->require_subcommand(1);

  {
    auto* sub = nu->add_subcommand("build", "Tabulate nu on [1, N] for the first residue; prints the mean");
    auto f = std::make_shared<SieveFlags>();
    auto out_path = std::make_shared<std::string>();
    f->add(sub);
    sub->add_option("--out", *out_path, "CSV path (columns x,nu)");
    bind(sub, reg, [f, out_path] {
      const auto ctx = f->context();
      const auto pt = f->table(ctx);
      const auto table = sieve::nu_axis(ctx, ctx.b.front(), pt);
      if (!out_path->empty()) {
        std::ofstream os(*out_path);
        if (!os) fail(Errc::InvalidArgument, "cannot write " + *out_path);
        sieve::write_nu_csv(os, table);
      }
      double lo = table[1], hi = table[1];
      for (std::size_t x = 1; x < table.size(); ++x) lo = std::min(lo, table[x]), hi = std::max(hi, table[x]);
      Outcome out;
      out.primary = fmt(mean(table));
      out.detail = {{"context", sieve::context_to_json(ctx)}, {"mean", num(mean(table))}, {"min", num(lo)},
                    {"max", num(hi)}};
      if (!out_path->empty()) out.detail["csv"] = *out_path;
      return out;
    });
  }

  {
    auto* sub = nu->add_subcommand("correlate", "E_x prod_i nu(x + h_i) over [1, N]");
    auto f = std::make_shared<SieveFlags>();
    auto shifts = std::make_shared<std::string>("0");
    auto cyclic = std::make_shared<bool>(false);
    auto tol = std::make_shared<double>(-1.0);
    f->add(sub);
    sub->add_option("--shifts", *shifts, "shifts h_1,...,h_J")->required();
    sub->add_flag("--cyclic", *cyclic, "wrap around mod N instead of truncating");
    sub->add_option("--tol", *tol, "report a verdict |value - 1| <= tol (exit 1 otherwise)");
    bind(sub, reg, [=] {
      const auto ctx = f->context();
      const auto table = sieve::nu_axis(ctx, ctx.b.front(), f->table(ctx));
      const double v = sieve::correlation_average(table, parse_int_list(*shifts), *cyclic);
      Outcome out;
      out.primary = fmt(v);
      out.detail = {{"context", sieve::context_to_json(ctx)}, {"shifts", parse_int_list(*shifts)},
                    {"cyclic", *cyclic}, {"value", num(v)}, {"deviation", num(v - 1.0)}};
      if (*tol >= 0) {
        const bool ok = std::abs(v - 1.0) <= *tol;
        out.detail["tolerance"] = num(*tol);
        out.detail["within_tolerance"] = ok;
        out.exit_code = ok ? 0 : 1;
      }
      return out;
    });
  }

  {
    auto* sub = nu->add_subcommand("forms-check", "E_h E_x prod_j nu(x + Q_j(h)) for a family Q");
    auto f = std::make_shared<SieveFlags>();
    auto system = std::make_shared<std::string>();
    auto H = std::make_shared<std::int64_t>(10);
    auto tol = std::make_shared<double>(-1.0);
    f->add(sub);
    sub->add_option("--system", *system, "family JSON (polynomials in h only)")->required();
    sub->add_option("--H", *H, "parameter box [H]^t");
    sub->add_option("--tol", *tol, "report a verdict |value - 1| <= tol (exit 1 otherwise)");
    bind(sub, reg, [=, &reg] {
      const auto q = polysys::family_from_json(polysys::load_json_file(*system));
      auto ctx = f->context();
      if (ctx.dimension() == 1 && q.dimension > 1) sieve::set_residues(ctx, std::vector<std::int64_t>(q.dimension, ctx.b[0]));
      const auto nu_d = sieve::nu_grid(ctx, f->table(ctx));
      const auto st = sieve::polynomial_forms_check(nu_d, q, *H, reg.globals.budget, reg.globals.seed);
      Outcome out;
      out.primary = fmt(st.value);
      out.detail = {{"context", sieve::context_to_json(ctx)}, {"H", *H},
                    {"value", num(st.value)},  {"std_error", num(st.std_error)},
                    {"deviation", num(st.deviation)}, {"exhaustive", st.exhaustive},
                    {"h_evaluated", st.h_evaluated}};
      if (*tol >= 0) {
        const bool ok = std::abs(st.deviation) <= *tol;
        out.detail["tolerance"] = num(*tol);
        out.detail["within_tolerance"] = ok;
        out.exit_code = ok ? 0 : 1;
      }
      return out;
    });
  }
}

}  // namespace polyprimes::cli
