#pragma once

#include <cstdint>
#include <vector>

#include "polyprimes/grid/norms.hpp"

namespace polyprimes::grid {

struct VdcResult {
  double lhs_sq = 0.0;  // |E_{n in [M]} x_n|^2
  double rhs = 0.0;     // E_n E_{h,h' in [H]} x_{n+h} x_{n+h'}
  // e (2 sup|x| + e) with e = sup|x| / (M H) * sum_{h=1}^{H} 2 min(h, M),
  // which bounds |E_n x_n - E_n E_h x_{n+h}| by boundary counting.
  double bound = 0.0;
  bool holds() const noexcept { return lhs_sq <= rhs + bound; }
};

// x holds x_1..x_{M+H} at indices 0..M+H-1. Throws RangeTooShort unless
// M >= H >= 1 and the sequence covers [M + H].
VdcResult vdc_check(const std::vector<double>& x, std::int64_t M, std::int64_t H);

// E_x (nu(x) - 1) prod_k D_k(x).
double orthogonality_check(const GridFunction& nu, const std::vector<GridFunction>& duals);

struct GcsResult {
  double inner = 0.0;
  double norm_product = 0.0;  // prod_omega ||f_omega||
  bool holds(double rel = 1e-9) const noexcept;
};

// Gowers-Cauchy-Schwarz: |<f_omega>| <= prod_omega ||f_omega||.
GcsResult gowers_cauchy_schwarz(const CubeFamily& family, const BoxSpec& spec, Exec exec = Exec::Parallel);

}  // namespace polyprimes::grid
