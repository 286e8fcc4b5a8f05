#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "polyprimes/grid/norms.hpp"
#include "polyprimes/lattice_set.hpp"
#include "polyprimes/scalar_poly.hpp"

namespace polyprimes::search {

struct ConfigurationQuery {
  int dimension = 1;
  std::vector<ScalarPoly> P;  // P_j(0) = 0
  std::vector<std::vector<std::int64_t>> V;
  std::int64_t N = 0;
  std::int64_t y_max = 0;
  LatticeSet target;
  // Reduce points into [1, N]^d instead of discarding those outside; only
  // for cross-checks against cyclic grid averages.
  bool cyclic = false;

  void validate() const;
};

struct ConfigurationHit {
  std::vector<std::int64_t> x;
  std::int64_t y = 0;
  std::vector<std::vector<std::int64_t>> points;  // x + P_j(y) v_j

  friend bool operator==(const ConfigurationHit&, const ConfigurationHit&) = default;
};

struct SearchOptions {
  std::size_t limit = 0;  // 0 for all hits
  // Guard against listing more hits than fit in memory (TargetTooLarge).
  std::size_t max_hits = 20'000'000;
};

// Hits in lexicographic (y, x) order, x in [1, N]^d, y in [1, y_max].
std::vector<ConfigurationHit> find_configurations(const ConfigurationQuery& q, const SearchOptions& opts = {});

// Re-evaluates every point through exact big-integer arithmetic and checks
// membership; true when the hit is genuine.
bool revalidate(const ConfigurationQuery& q, const ConfigurationHit& hit);

// Lambda_{P,V}(f_0..f_l) with M = y_max.
double count_weighted(const ConfigurationQuery& q, const std::vector<const GridFunction*>& weights,
                      grid::Exec exec = grid::Exec::Parallel);

struct MinYProfile {
  std::map<std::vector<std::int64_t>, std::int64_t> first_y;  // x with a hit -> smallest y
  std::map<std::int64_t, std::int64_t> histogram;             // y -> number of x
  std::int64_t max_min_y = 0;
  std::size_t x_with_hits() const noexcept { return first_y.size(); }
};

MinYProfile min_y_profile(const ConfigurationQuery& q, const SearchOptions& opts = {});

// Lambda_{P,V}(g, ..., g) for 0 <= g <= 1 (OutOfRangeFunction otherwise).
double bl_positivity_probe(const GridFunction& g, const std::vector<ScalarPoly>& P,
                           const std::vector<std::vector<std::int64_t>>& V, std::int64_t M);

// Prime lattice P_N^d, primes in one residue class, as product sets.
LatticeSet prime_lattice(int dimension, std::int64_t N);
LatticeSet residue_prime_lattice(int dimension, std::int64_t N, std::int64_t modulus, std::int64_t residue);

}  // namespace polyprimes::search
