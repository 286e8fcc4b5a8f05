#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polyprimes/grid_function.hpp"
#include "polyprimes/polysys/family.hpp"

namespace polyprimes::sieve {

// E_x prod_i nu(x + h_i) over x in [1, N] for a table indexed by x in [0, N].
// Non-cyclic mode keeps only x with every x + h_i in [1, N] and throws
// ShiftOutOfRange when no such x exists; cyclic mode reduces mod N into [1, N].
double correlation_average(const std::vector<double>& nu, const std::vector<std::int64_t>& shifts,
                           bool cyclic = false);

struct FormsStatistic {
  double value = 0.0;
  double std_error = 0.0;  // 0 when exhaustive
  double deviation = 0.0;  // value - 1
  std::uint64_t h_evaluated = 0;
  bool exhaustive = true;
};

// E_{h in [H]^t} E_{x in X} prod_j nu(x + Q_j(h)) on the cyclic grid. Exhaustive
// when H^t * J * N^d <= budget, otherwise h is sampled (seeded) until the
// budget is spent. Throws DegenerateSystem unless Q is non-degenerate.
FormsStatistic polynomial_forms_check(const GridFunction& nu, const polysys::PolyFamily& q, std::int64_t H,
                                      double budget = 1e9, std::uint64_t seed = 1);

// Exp(x) = e^x - 1.
double exp_fn(double x);

// Both sides of Exp(a_1 + ... + a_d) <= Exp(2^d a_1) + ... + Exp(2^d a_d).
std::pair<double, double> exp_sum_bound(const std::vector<double>& alpha);

}  // namespace polyprimes::sieve
