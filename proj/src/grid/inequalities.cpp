#include "polyprimes/grid/inequalities.hpp"

#include <algorithm>
#include <cmath>

#include "polyprimes/error.hpp"

namespace polyprimes::grid {

VdcResult vdc_check(const std::vector<double>& x, std::int64_t M, std::int64_t H) {
  if (H < 1 || M < H) fail(Errc::RangeTooShort, "need M >= H >= 1");
  if (static_cast<std::int64_t>(x.size()) < M + H) {
    fail(Errc::RangeTooShort, "sequence of length " + std::to_string(x.size()) + " does not cover [M + H]");
  }
  double sup = 0.0;
  for (std::int64_t i = 0; i < M + H; ++i) sup = std::max(sup, std::abs(x[i]));

  double mean = 0.0;
  for (std::int64_t n = 1; n <= M; ++n) mean += x[n - 1];
  mean /= static_cast<double>(M);

  // E_{h,h'} x_{n+h} x_{n+h'} = (E_h x_{n+h})^2.
  double rhs = 0.0;
  for (std::int64_t n = 1; n <= M; ++n) {
    double a = 0.0;
    for (std::int64_t h = 1; h <= H; ++h) a += x[n + h - 1];
    a /= static_cast<double>(H);
    rhs += a * a;
  }
  rhs /= static_cast<double>(M);

  double count = 0.0;
  for (std::int64_t h = 1; h <= H; ++h) count += 2.0 * static_cast<double>(std::min(h, M));
  const double e = sup * count / (static_cast<double>(M) * static_cast<double>(H));

  VdcResult r;
  r.lhs_sq = mean * mean;
  r.rhs = rhs;
  // Rounding in the two averages is far below this slack.
  r.bound = e * (2.0 * sup + e) + 1e-12 * (r.lhs_sq + rhs);
  return r;
}

double orthogonality_check(const GridFunction& nu, const std::vector<GridFunction>& duals) {
  for (const auto& D : duals) {
    if (!D.same_shape(nu)) fail(Errc::DimensionMismatch, "dual function lives on a different grid");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    double p = nu[i] - 1.0;
    for (const auto& D : duals) p *= D[i];
    total += p;
  }
  return total / static_cast<double>(nu.size());
}

bool GcsResult::holds(double rel) const noexcept {
  return std::abs(inner) <= norm_product * (1.0 + rel) + 1e-300;
}

GcsResult gowers_cauchy_schwarz(const CubeFamily& family, const BoxSpec& spec, Exec exec) {
  GcsResult r;
  r.inner = gowers_inner(family, spec, exec);
  r.norm_product = 1.0;
  for (const auto& [w, f] : family) r.norm_product *= box_norm(f, spec, exec);
  return r;
}

}  // namespace polyprimes::grid
