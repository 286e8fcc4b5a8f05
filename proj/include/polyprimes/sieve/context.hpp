#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyprimes/lattice_set.hpp"

namespace polyprimes::sieve {

enum class ChiKind {
  // c cos(pi t / 2) on |t| < 1 with c = 2 sqrt 2 / pi.
  Cosine,
  // c exp(-1 / (1 - t^2)), smooth at the endpoints; c fixed by int_0^1 chi'^2 = 1.
  Bump,
};

const char* chi_kind_name(ChiKind k) noexcept;
ChiKind parse_chi_kind(const std::string& name);

// Even, supported on (-1, 1), int_0^1 chi'(t)^2 dt = 1.
double chi(double t, ChiKind kind = ChiKind::Cosine);

struct SieveContext {
  std::int64_t n_prime = 0;  // N'
  int w = 2;
  std::int64_t W = 2;
  std::int64_t phi_W = 1;
  std::int64_t N = 0;  // floor(N' / W)
  double eps0 = 0.1;
  std::int64_t R = 0;  // floor(N'^eps0)
  double c0 = 0.01;
  ChiKind chi_kind = ChiKind::Cosine;
  // Residues mod W, one per axis; empty until chosen.
  std::vector<std::int64_t> b;

  int dimension() const noexcept { return static_cast<int>(b.size()); }
  // Largest value W x + b_i reached for x in [0, N].
  std::int64_t max_value() const;
  double nu_scale() const;    // phi(W) log R / W
  double f_A_scale() const;   // (c0 phi(W) log N / W) per axis
  // First and last x of [sqrt N, N - sqrt N].
  std::int64_t support_lo() const;
  std::int64_t support_hi() const;
};

std::int64_t primorial(int w);
std::int64_t euler_phi_primorial(int w);

// w = max(2, floor(log log log N' / 10)) and c0 = eps0 / 10 unless overridden.
SieveContext make_context(std::int64_t n_prime, double eps0, std::optional<int> w_override = std::nullopt,
                          std::optional<double> c0_override = std::nullopt);

// Sets ctx.b after validating length and gcd(b_i, W) = 1.
void set_residues(SieveContext& ctx, std::vector<std::int64_t> b);

struct ResidueChoice {
  std::vector<std::int64_t> b;
  // Points x in [sqrt N, N - sqrt N]^d with W x + b in A; saturates.
  std::int64_t count = 0;
};

// The b maximizing the restricted count, ties to the lexicographically
// smallest b. Throws EmptyIntersection when every class is empty.
ResidueChoice choose_residue(const LatticeSet& A, const SieveContext& ctx);

}  // namespace polyprimes::sieve
