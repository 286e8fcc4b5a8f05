#include "polyprimes/sieve/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "polyprimes/error.hpp"

namespace polyprimes::sieve {

double correlation_average(const std::vector<double>& nu, const std::vector<std::int64_t>& shifts, bool cyclic) {
  if (nu.size() < 2) fail(Errc::InvalidArgument, "nu table must cover [0, N] with N >= 1");
  const auto N = static_cast<std::int64_t>(nu.size()) - 1;
  if (shifts.empty()) return 1.0;
  std::int64_t lo = 1, hi = N;
  if (!cyclic) {
    // x + h in [1, N] for every shift.
    for (auto h : shifts) {
      lo = std::max(lo, 1 - h);
      hi = std::min(hi, N - h);
    }
    if (lo > hi) fail(Errc::ShiftOutOfRange, "no x in [1, N] keeps every shift inside [1, N]");
  }
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::int64_t x = lo; x <= hi; ++x) {
    double p = 1.0;
    for (auto h : shifts) {
      std::int64_t y = x + h;
      if (cyclic) {
        y = mod_floor(y, N);
        if (y == 0) y = N;
      }
      p *= nu[y];
    }
    sum += p;
  }
  return sum / static_cast<double>(hi - lo + 1);
}

namespace {

double forms_at(const GridFunction& nu, const std::vector<std::int64_t>& off, std::size_t J) {
  const int d = nu.dimension();
  const std::int64_t N = nu.modulus();
  const std::size_t size = nu.size();
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(static)
  for (std::size_t idx = 0; idx < size; ++idx) {
    // Decompose once, then add each offset coordinatewise.
    std::int64_t x[8];
    std::size_t rest = idx;
    for (int i = d - 1; i >= 0; --i) {
      x[i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(N));
      rest /= static_cast<std::size_t>(N);
    }
    double p = 1.0;
    for (std::size_t j = 0; j < J && p != 0.0; ++j) {
      std::size_t k = 0;
      for (int i = 0; i < d; ++i) {
        std::int64_t c = x[i] + off[j * d + i];
        if (c >= N) c -= N;
        k = k * static_cast<std::size_t>(N) + static_cast<std::size_t>(c);
      }
      p *= nu[k];
    }
    sum += p;
  }
  return sum / static_cast<double>(size);
}

}  // namespace

FormsStatistic polynomial_forms_check(const GridFunction& nu, const polysys::PolyFamily& q, std::int64_t H,
                                      double budget, std::uint64_t seed) {
  q.validate();
  if (q.dimension != nu.dimension()) {
    fail(Errc::DimensionMismatch, "family of dimension " + std::to_string(q.dimension) + " on a grid of dimension " +
                                      std::to_string(nu.dimension()));
  }
  if (nu.dimension() > 8) fail(Errc::DimensionMismatch, "grid dimension above 8 is not supported");
  if (H < 1) fail(Errc::InvalidArgument, "H must be >= 1");
  if (!polysys::is_nondegenerate(q.polys, q.directions)) {
    fail(Errc::DegenerateSystem, "Q has a pairwise difference with a constant coordinate projection");
  }
  const std::size_t t = q.parameters.size(), J = q.polys.size();
  const double per_h = static_cast<double>(J) * static_cast<double>(nu.size());
  const double total_h = std::pow(static_cast<double>(H), static_cast<double>(t));

  FormsStatistic st;
  if (total_h * per_h <= budget) {
    const auto n = static_cast<std::uint64_t>(std::llround(total_h));
    double sum = 0.0;
    for (std::uint64_t k = 0; k < n; ++k) {
      const auto h = polysys::parameter_point(k, t, H);
      sum += forms_at(nu, polysys::family_offsets(q, h, nu.modulus()), J);
    }
    st.value = sum / static_cast<double>(n);
    st.h_evaluated = n;
  } else {
    const auto n = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(budget / per_h));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(1, H);
    double sum = 0.0, sq = 0.0;
    for (std::uint64_t k = 0; k < n; ++k) {
      std::vector<std::int64_t> h(t);
      for (auto& v : h) v = pick(rng);
      const double v = forms_at(nu, polysys::family_offsets(q, h, nu.modulus()), J);
      sum += v;
      sq += v * v;
    }
    const double m = sum / static_cast<double>(n);
    const double var = std::max(0.0, (sq / static_cast<double>(n) - m * m)) * static_cast<double>(n) / (n - 1.0);
    st.value = m;
    st.std_error = std::sqrt(var / static_cast<double>(n));
    st.h_evaluated = n;
    st.exhaustive = false;
  }
  st.deviation = st.value - 1.0;
  return st;
}

double exp_fn(double x) { return std::expm1(x); }

std::pair<double, double> exp_sum_bound(const std::vector<double>& alpha) {
  double total = 0.0, rhs = 0.0;
  const double scale = std::ldexp(1.0, static_cast<int>(alpha.size()));
  for (double a : alpha) {
    if (!(a >= 0.0)) fail(Errc::InvalidArgument, "exp_sum_bound needs nonnegative arguments");
    total += a;
    rhs += exp_fn(scale * a);
  }
  return {exp_fn(total), rhs};
}

}  // namespace polyprimes::sieve
