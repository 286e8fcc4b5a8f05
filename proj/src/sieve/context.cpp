#include "polyprimes/sieve/context.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

#include "polyprimes/error.hpp"

namespace polyprimes::sieve {

namespace {

double bump_raw(double t) { return std::exp(-1.0 / (1.0 - t * t)); }

// Normalizing constant of the bump: 1 / sqrt(int_0^1 (d/dt bump_raw)^2).
double bump_constant() {
  static const double c = [] {
    const int n = 20000;  // even, composite Simpson
    auto g = [](double t) {
      if (t >= 1.0) return 0.0;
      const double u = 1.0 - t * t;
      const double d = bump_raw(t) * 2.0 * t / (u * u);
      return d * d;
    };
    double s = g(0.0) + g(1.0);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * g(static_cast<double>(i) / n);
    return 1.0 / std::sqrt(s / (3.0 * n));
  }();
  return c;
}

std::int64_t floor_root_power(std::int64_t n, double e) {
  auto r = static_cast<std::int64_t>(std::floor(std::pow(static_cast<long double>(n), static_cast<long double>(e))));
  // pow may land one off either side of an exact integer power.
  auto le = [&](std::int64_t v) {
    return std::pow(static_cast<long double>(v), 1.0L / e) <= static_cast<long double>(n) * (1 + 1e-15L);
  };
  while (r > 1 && !le(r)) --r;
  while (le(r + 1)) ++r;
  return std::max<std::int64_t>(r, 1);
}

std::int64_t ceil_sqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while (r * r < n) ++r;
  return r;
}

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::int64_t>::max() / b) return std::numeric_limits<std::int64_t>::max();
  return a * b;
}

}  // namespace

const char* chi_kind_name(ChiKind k) noexcept { return k == ChiKind::Cosine ? "cosine" : "bump"; }

ChiKind parse_chi_kind(const std::string& name) {
  if (name == "cosine") return ChiKind::Cosine;
  if (name == "bump") return ChiKind::Bump;
  fail(Errc::InvalidArgument, "unknown cutoff '" + name + "' (expected cosine or bump)");
}

double chi(double t, ChiKind kind) {
  t = std::abs(t);
  if (t >= 1.0) return 0.0;
  if (kind == ChiKind::Cosine) return 2.0 * std::numbers::sqrt2 / std::numbers::pi * std::cos(std::numbers::pi * t / 2.0);
  return bump_constant() * bump_raw(t);
}

std::int64_t primorial(int w) {
  std::int64_t W = 1;
  for (int p = 2; p <= w; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (!prime) continue;
    if (W > std::numeric_limits<std::int64_t>::max() / p) fail(Errc::InvalidArgument, "primorial of w overflows");
    W *= p;
  }
  return W;
}

std::int64_t euler_phi_primorial(int w) {
  std::int64_t phi = 1;
  for (int p = 2; p <= w; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (prime) phi *= p - 1;
  }
  return phi;
}

std::int64_t SieveContext::max_value() const {
  const std::int64_t bmax = b.empty() ? W - 1 : *std::max_element(b.begin(), b.end());
  return W * N + bmax;
}

double SieveContext::nu_scale() const {
  return static_cast<double>(phi_W) * std::log(static_cast<double>(R)) / static_cast<double>(W);
}

double SieveContext::f_A_scale() const {
  return c0 * static_cast<double>(phi_W) * std::log(static_cast<double>(N)) / static_cast<double>(W);
}

std::int64_t SieveContext::support_lo() const { return std::max<std::int64_t>(1, ceil_sqrt(N)); }

std::int64_t SieveContext::support_hi() const {
  return N - ceil_sqrt(N);
}

SieveContext make_context(std::int64_t n_prime, double eps0, std::optional<int> w_override,
                          std::optional<double> c0_override) {
  if (!(eps0 > 0.0 && eps0 < 1.0)) fail(Errc::InvalidEpsilon, "eps0 must lie in (0, 1), got " + std::to_string(eps0));
  SieveContext ctx;
  ctx.n_prime = n_prime;
  ctx.eps0 = eps0;
  if (w_override) {
    if (*w_override < 2) fail(Errc::InvalidArgument, "w must be >= 2");
    ctx.w = *w_override;
  } else {
    int w = 0;
    if (n_prime > 16) {
      w = static_cast<int>(std::floor(0.1 * std::log(std::log(std::log(static_cast<double>(n_prime))))));
    }
    ctx.w = std::max(2, w);
  }
  ctx.W = primorial(ctx.w);
  ctx.phi_W = euler_phi_primorial(ctx.w);
  ctx.N = n_prime / ctx.W;
  if (ctx.N < 2) {
    fail(Errc::LimitTooSmall, "N' = " + std::to_string(n_prime) + " leaves N = floor(N'/W) = " +
                                  std::to_string(ctx.N) + " < 2 for W = " + std::to_string(ctx.W));
  }
  ctx.R = floor_root_power(n_prime, eps0);
  ctx.c0 = c0_override.value_or(eps0 / 10.0);
  if (!(ctx.c0 > 0.0) || !std::isfinite(ctx.c0)) fail(Errc::InvalidArgument, "c0 must be positive");
  return ctx;
}

void set_residues(SieveContext& ctx, std::vector<std::int64_t> b) {
  if (b.empty()) fail(Errc::InvalidArgument, "residue vector must have at least one entry");
  for (auto& bi : b) {
    if (bi < 0 || bi >= ctx.W) fail(Errc::InvalidArgument, "residue " + std::to_string(bi) + " not in [0, W)");
    if (std::gcd(bi, ctx.W) != 1) {
      fail(Errc::InvalidArgument, "residue " + std::to_string(bi) + " is not coprime to W = " + std::to_string(ctx.W));
    }
  }
  ctx.b = std::move(b);
}

ResidueChoice choose_residue(const LatticeSet& A, const SieveContext& ctx) {
  const int d = A.dimension();
  const std::int64_t lo = ctx.support_lo(), hi = ctx.support_hi();
  std::vector<std::int64_t> classes;
  for (std::int64_t r = 0; r < ctx.W; ++r) {
    if (std::gcd(r, ctx.W) == 1) classes.push_back(r);
  }
  ResidueChoice best;
  if (A.is_product()) {
    // The count factorizes over axes, so one best class serves every axis.
    std::map<std::int64_t, std::int64_t> per_class;
    for (auto r : classes) per_class[r] = 0;
    for (std::int64_t v : A.axis_list()) {
      const std::int64_t r = v % ctx.W, x = v / ctx.W;
      auto it = per_class.find(r);
      if (it != per_class.end() && x >= lo && x <= hi) ++it->second;
    }
    std::int64_t r_best = classes.front(), c_best = -1;
    for (auto [r, c] : per_class) {
      if (c > c_best) r_best = r, c_best = c;
    }
    best.b.assign(d, r_best);
    best.count = 1;
    for (int i = 0; i < d; ++i) best.count = sat_mul(best.count, c_best);
  } else {
    std::map<std::vector<std::int64_t>, std::int64_t> counts;
    for (const auto& p : A.points()) {
      std::vector<std::int64_t> b(d);
      bool ok = true;
      for (int i = 0; i < d && ok; ++i) {
        b[i] = p[i] % ctx.W;
        const std::int64_t x = p[i] / ctx.W;
        ok = std::gcd(b[i], ctx.W) == 1 && x >= lo && x <= hi;
      }
      if (ok) ++counts[b];
    }
    for (const auto& [b, c] : counts) {
      if (c > best.count) best.b = b, best.count = c;
    }
    if (best.b.empty()) best.b.assign(d, classes.front());
  }
  if (best.count == 0) {
    fail(Errc::EmptyIntersection, "no residue class b mod W = " + std::to_string(ctx.W) +
                                      " meets the set on [sqrt N, N - sqrt N]^d");
  }
  return best;
}

}  // namespace polyprimes::sieve
