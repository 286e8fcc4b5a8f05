#pragma once

#include <cstdint>
#include <vector>

#include "polyprimes/grid_function.hpp"
#include "polyprimes/lattice_set.hpp"
#include "polyprimes/sieve/context.hpp"
#include "polyprimes/sieve/prime_table.hpp"

namespace polyprimes::sieve {

// nu_i(x) = nu_scale * (sum over squarefree m | Wx + b, m < R of mu(m) chi(log m / log R))^2
// for x in [0, N], stored at index x.
std::vector<double> nu_axis(const SieveContext& ctx, std::int64_t b, const PrimeTable& pt);

// The inner divisor sum for one value n, without the square or the scale.
double divisor_sum(std::int64_t n, const SieveContext& ctx, const PrimeTable& pt);

// prod_i nu_i(x_i) on (Z/NZ)^d; residue 0 carries the value at x = N.
GridFunction nu_product(const std::vector<std::vector<double>>& axes, std::int64_t N);

// nu^(d) for the residues in ctx.b.
GridFunction nu_grid(const SieveContext& ctx, const PrimeTable& pt);

// f_A(x) = f_A_scale^d * 1_A(W x + b) on [sqrt N, N - sqrt N]^d, zero elsewhere.
GridFunction build_f_A(const LatticeSet& A, const SieveContext& ctx);

struct MajorantReport {
  std::size_t violations = 0;
  double max_excess = 0.0;  // max of f - nu, <= 0 when majorized
  std::vector<std::size_t> first_indices;  // up to 16 violating grid indices
  bool ok() const noexcept { return violations == 0; }
};

MajorantReport check_majorant(const GridFunction& f, const GridFunction& nu);

}  // namespace polyprimes::sieve
