#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "polyprimes/grid/kernels.hpp"
#include "polyprimes/polysys/family.hpp"
#include "polyprimes/scalar_poly.hpp"

namespace polyprimes::grid {

// Side directions u_1..u_s in Z^d and side length M; the modulus comes from
// the function the spec is applied to.
struct BoxSpec {
  std::vector<std::vector<std::int64_t>> directions;
  std::int64_t M = 1;

  std::size_t s() const noexcept { return directions.size(); }
  void validate(int dimension) const;
};

// Polynomial directions Q_1(h)..Q_s(h), h in [H]^t, side length M.
struct AvgBoxSpec {
  polysys::PolyFamily q;
  std::int64_t H = 1;
  std::int64_t M = 1;

  std::size_t s() const noexcept { return q.polys.size(); }
  std::size_t t() const noexcept { return q.parameters.size(); }
  void validate(int dimension) const;
};

// h-averages run exhaustively while H^t * M^(2s) * N^d <= budget, otherwise
// over a seeded sample stratified on h_1.
struct Sampling {
  double budget = 1e9;
  std::uint64_t seed = 1;
  bool require_exhaustive = false;
  Exec exec = Exec::Parallel;
};

// Vertex omega in {0,1}^s is the bit mask sum omega_i 2^(i-1).
using CubeFamily = std::map<unsigned, GridFunction>;

// Weight of a side difference e = y1 - y0 with y0, y1 uniform in [M]:
// (M - |e|) / M^2 for |e| < M.
double difference_weight(std::int64_t e, std::int64_t M);

// ||f||^(2^s), the average before the root, clamped at 0.
double box_power(const GridFunction& f, const BoxSpec& spec, Exec exec = Exec::Parallel);
double box_norm(const GridFunction& f, const BoxSpec& spec, Exec exec = Exec::Parallel);

struct NormEstimate {
  double norm = 0.0;
  double power = 0.0;      // E_h ||f||_{Q(h)}^(2^s)
  double std_error = 0.0;  // of power; 0 when exhaustive
  bool exhaustive = true;
  std::uint64_t h_evaluated = 0;
};

NormEstimate avg_box_norm(const GridFunction& f, const AvgBoxSpec& spec, const Sampling& sampling = {});

// E_x E_{y0,y1} prod_omega f_omega(x + sum_i y_i^(omega_i) u_i); needs all 2^s vertices.
double gowers_inner(const CubeFamily& family, const BoxSpec& spec, Exec exec = Exec::Parallel);

// D(x) = E_h E_{y0,y1} prod_{omega != 0} f_omega(x + sum_i omega_i (y1_i - y0_i) Q_i(h)).
// The parallelepiped is anchored at x, so <f, D(f)> = ||f||^(2^s).
GridFunction dual_function(const CubeFamily& family, const AvgBoxSpec& spec, const Sampling& sampling = {});

// Copies of f at every nonzero vertex.
CubeFamily constant_family(const GridFunction& f, std::size_t s, bool include_zero = false);

// E_x E_{y in [M]} prod_j f_j(x + P_j(y) v_j), cyclic.
double lambda_average(const std::vector<ScalarPoly>& P, const std::vector<std::vector<std::int64_t>>& V,
                      const std::vector<const GridFunction*>& fns, std::int64_t M, Exec exec = Exec::Parallel);

// The h points an average visits: all of [H]^t, or a stratified sample.
struct HPlan {
  std::vector<std::vector<std::int64_t>> points;
  std::vector<std::size_t> stratum;  // index of h_1 - 1 per point
  bool exhaustive = true;
};
HPlan plan_h(std::size_t t, std::int64_t H, double cost_per_h, const Sampling& sampling);

}  // namespace polyprimes::grid
