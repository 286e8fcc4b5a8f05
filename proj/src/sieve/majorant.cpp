#include "polyprimes/sieve/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyprimes/error.hpp"

namespace polyprimes::sieve {

namespace {

struct DivisorWalk {
  const std::uint32_t* primes;
  std::size_t count;
  std::int64_t R;
  double log_R;
  ChiKind kind;

  // Squarefree m = prod of a subset of primes[i..]; m * p < R prunes since
  // the primes are increasing.
  double walk(std::size_t i, std::int64_t m, int sign) const {
    double s = sign * chi(std::log(static_cast<double>(m)) / log_R, kind);
    for (std::size_t k = i; k < count; ++k) {
      const std::int64_t next = m * primes[k];
      if (next >= R) break;
      s += walk(k + 1, next, -sign);
    }
    return s;
  }
};

void check_range(const SieveContext& ctx, std::int64_t b, const PrimeTable& pt) {
  if (ctx.R < 2) fail(Errc::LimitTooSmall, "truncation R = " + std::to_string(ctx.R) + " < 2");
  const std::int64_t top = ctx.W * ctx.N + b;
  if (top > pt.limit()) {
    fail(Errc::FactorizationRangeExceeded, "values W x + b reach " + std::to_string(top) +
                                               " but the prime table stops at " + std::to_string(pt.limit()));
  }
}

}  // namespace

double divisor_sum(std::int64_t n, const SieveContext& ctx, const PrimeTable& pt) {
  const auto f = pt.distinct_factors(n);
  DivisorWalk walk{f.data(), f.size(), ctx.R, std::log(static_cast<double>(ctx.R)), ctx.chi_kind};
  return walk.walk(0, 1, 1);
}

std::vector<double> nu_axis(const SieveContext& ctx, std::int64_t b, const PrimeTable& pt) {
  check_range(ctx, b, pt);
  const double scale = ctx.nu_scale();
  const std::int64_t N = ctx.N;
  std::vector<double> out(static_cast<std::size_t>(N) + 1);
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x <= N; ++x) {
    const std::int64_t n = ctx.W * x + b;
    // n = 0 only for x = 0, b = 0, excluded by gcd(b, W) = 1.
    std::uint32_t fac[16];
    std::size_t k = 0;
    for (std::int64_t r = n; r > 1;) {
      const std::uint32_t p = pt.spf(r);
      if (p >= static_cast<std::uint64_t>(ctx.R)) break;
      fac[k++] = p;
      while (r % p == 0) r /= p;
    }
    DivisorWalk walk{fac, k, ctx.R, std::log(static_cast<double>(ctx.R)), ctx.chi_kind};
    const double s = walk.walk(0, 1, 1);
    out[x] = scale * s * s;
  }
  return out;
}

GridFunction nu_product(const std::vector<std::vector<double>>& axes, std::int64_t N) {
  const int d = static_cast<int>(axes.size());
  if (d < 1) fail(Errc::DimensionMismatch, "nu_product needs at least one axis");
  for (const auto& a : axes) {
    if (static_cast<std::int64_t>(a.size()) != N + 1) fail(Errc::DimensionMismatch, "axis table length must be N + 1");
  }
  GridFunction g(d, N, 1.0);
  const std::size_t size = g.size();
#pragma omp parallel for schedule(static)
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rest = idx;
    double v = 1.0;
    for (int i = d - 1; i >= 0; --i) {
      const auto r = static_cast<std::int64_t>(rest % static_cast<std::size_t>(N));
      rest /= static_cast<std::size_t>(N);
      v *= axes[i][r == 0 ? N : r];
    }
    g[idx] = v;
  }
  return g;
}

GridFunction nu_grid(const SieveContext& ctx, const PrimeTable& pt) {
  if (ctx.b.empty()) fail(Errc::InvalidArgument, "residues b not chosen");
  std::vector<std::vector<double>> axes;
  for (auto bi : ctx.b) axes.push_back(nu_axis(ctx, bi, pt));
  return nu_product(axes, ctx.N);
}

GridFunction build_f_A(const LatticeSet& A, const SieveContext& ctx) {
  const int d = ctx.dimension();
  if (d < 1) fail(Errc::InvalidArgument, "residues b not chosen");
  if (A.dimension() != d) {
    fail(Errc::DimensionMismatch, "set of dimension " + std::to_string(A.dimension()) + " vs " + std::to_string(d) +
                                      " residues");
  }
  const double value = std::pow(ctx.f_A_scale(), d);
  const std::int64_t lo = ctx.support_lo(), hi = ctx.support_hi();
  GridFunction f(d, ctx.N, 0.0);
  if (lo > hi) return f;
  if (A.is_product()) {
    // Per-axis admissible x, then the product.
    std::vector<std::vector<std::int64_t>> axis_x(d);
    for (int i = 0; i < d; ++i) {
      for (std::int64_t x = lo; x <= hi; ++x) {
        if (A.axis_contains(ctx.W * x + ctx.b[i])) axis_x[i].push_back(x);
      }
    }
    std::vector<std::size_t> pos(d, 0);
    std::vector<std::int64_t> pt(d);
    for (int i = 0; i < d; ++i) {
      if (axis_x[i].empty()) return f;
    }
    while (true) {
      for (int i = 0; i < d; ++i) pt[i] = axis_x[i][pos[i]];
      f[f.index_of(pt)] = value;
      int i = d - 1;
      while (i >= 0 && ++pos[i] == axis_x[i].size()) pos[i--] = 0;
      if (i < 0) break;
    }
  } else {
    std::vector<std::int64_t> x(d);
    for (const auto& p : A.points()) {
      bool ok = true;
      for (int i = 0; i < d && ok; ++i) {
        const std::int64_t q = p[i] - ctx.b[i];
        ok = q >= 0 && q % ctx.W == 0 && q / ctx.W >= lo && q / ctx.W <= hi;
        x[i] = ok ? q / ctx.W : 0;
      }
      if (ok) f[f.index_of(x)] = value;
    }
  }
  return f;
}

MajorantReport check_majorant(const GridFunction& f, const GridFunction& nu) {
  if (!f.same_shape(nu)) fail(Errc::DimensionMismatch, "f and nu live on different grids");
  MajorantReport rep;
  rep.max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double e = f[i] - nu[i];
    rep.max_excess = std::max(rep.max_excess, e);
    if (f[i] < 0.0 || e > 0.0) {
      ++rep.violations;
      if (rep.first_indices.size() < 16) rep.first_indices.push_back(i);
    }
  }
  return rep;
}

}  // namespace polyprimes::sieve
