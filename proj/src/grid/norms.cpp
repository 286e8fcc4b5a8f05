#include "polyprimes/grid/norms.hpp"

#include <cmath>
#include <iostream>
#include <random>

#include "polyprimes/error.hpp"

namespace polyprimes::grid {

namespace {

std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& v, std::int64_t N) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod_floor(v[i], N);
  return out;
}

// Roots a power average, clamping floating noise below zero.
double root(double power, std::size_t s) {
  if (power < 0.0) {
    if (power < -1e-8) std::cerr << "warning: box average " << power << " < 0 clamped to 0\n";
    power = 0.0;
  }
  return std::pow(power, 1.0 / std::ldexp(1.0, static_cast<int>(s)));
}

// Calls fn(weight, e) for every side-difference tuple e in (-M, M)^s.
template <class Fn>
void for_each_difference(std::size_t s, std::int64_t M, Fn&& fn) {
  std::vector<std::int64_t> e(s, -(M - 1));
  while (true) {
    double w = 1.0;
    for (auto ei : e) w *= difference_weight(ei, M);
    fn(w, e);
    std::size_t i = s;
    while (i > 0 && e[i - 1] == M - 1) e[--i] = -(M - 1);
    if (i == 0) break;
    ++e[i - 1];
  }
}

// Offset of vertex omega: sum_i omega_i e_i u_i mod N.
std::vector<std::int64_t> vertex_offset(unsigned omega, const std::vector<std::int64_t>& e,
                                        const std::vector<std::vector<std::int64_t>>& u, std::int64_t N, int d) {
  std::vector<std::int64_t> o(d, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(omega >> i & 1U)) continue;
    for (int k = 0; k < d; ++k) o[k] = mod_floor(o[k] + mod_floor(e[i], N) * u[i][k] % N, N);
  }
  return o;
}

// sum_e w(e) E_x prod_omega f_omega(x + offset(omega, e)) over the vertices in fs.
double cube_average(const std::vector<std::pair<unsigned, const GridFunction*>>& fs,
                    const std::vector<std::vector<std::int64_t>>& u, std::int64_t M, Exec exec) {
  const GridFunction& g = *fs.front().second;
  const std::int64_t N = g.modulus();
  const int d = g.dimension();
  double total = 0.0;
  std::vector<Term> terms(fs.size());
  for_each_difference(u.size(), M, [&](double w, const std::vector<std::int64_t>& e) {
    for (std::size_t k = 0; k < fs.size(); ++k) terms[k] = Term{fs[k].second, vertex_offset(fs[k].first, e, u, N, d)};
    total += w * product_mean(terms, exec);
  });
  return total;
}

std::vector<std::vector<std::int64_t>> directions_at(const AvgBoxSpec& spec, const std::vector<std::int64_t>& h,
                                                     std::int64_t N) {
  const auto off = polysys::family_offsets(spec.q, h, N);
  const auto d = static_cast<std::size_t>(spec.q.dimension);
  std::vector<std::vector<std::int64_t>> u(spec.s());
  for (std::size_t j = 0; j < spec.s(); ++j) u[j].assign(off.begin() + j * d, off.begin() + (j + 1) * d);
  return u;
}

double spec_cost(const AvgBoxSpec& spec, const GridFunction& f) {
  return std::pow(static_cast<double>(spec.M), 2.0 * static_cast<double>(spec.s())) * static_cast<double>(f.size());
}

}  // namespace

double difference_weight(std::int64_t e, std::int64_t M) {
  const std::int64_t a = e < 0 ? -e : e;
  if (a >= M) return 0.0;
  return static_cast<double>(M - a) / (static_cast<double>(M) * static_cast<double>(M));
}

void BoxSpec::validate(int dimension) const {
  if (directions.empty()) fail(Errc::InvalidArgument, "box spec needs at least one direction");
  if (M < 1) fail(Errc::InvalidArgument, "side length M must be >= 1");
  if (directions.size() > 16) fail(Errc::InvalidArgument, "at most 16 box directions");
  for (const auto& u : directions) {
    if (static_cast<int>(u.size()) != dimension) {
      fail(Errc::DimensionMismatch, "direction of length " + std::to_string(u.size()) + " on a grid of dimension " +
                                        std::to_string(dimension));
    }
  }
}

void AvgBoxSpec::validate(int dimension) const {
  q.validate();
  if (q.polys.empty()) fail(Errc::InvalidArgument, "averaged box spec needs at least one polynomial");
  if (q.polys.size() > 16) fail(Errc::InvalidArgument, "at most 16 box directions");
  if (q.dimension != dimension) {
    fail(Errc::DimensionMismatch, "family of dimension " + std::to_string(q.dimension) + " on a grid of dimension " +
                                      std::to_string(dimension));
  }
  if (H < 1 || M < 1) fail(Errc::InvalidArgument, "H and M must be >= 1");
  for (std::size_t j = 0; j < q.polys.size(); ++j) {
    if (q.polys[j].deg_y() != 0) fail(Errc::InvalidArgument, "Q_" + std::to_string(j + 1) + " depends on y");
    for (std::size_t i = 0; i < static_cast<std::size_t>(dimension); ++i) {
      if (polysys::project(q.polys[j], q.directions, i).is_zero()) {
        fail(Errc::InvalidArgument,
             "Q_" + std::to_string(j + 1) + " has a vanishing coordinate " + std::to_string(i + 1));
      }
    }
  }
}

double box_power(const GridFunction& f, const BoxSpec& spec, Exec exec) {
  spec.validate(f.dimension());
  const auto u = [&] {
    std::vector<std::vector<std::int64_t>> r;
    for (const auto& v : spec.directions) r.push_back(reduce(v, f.modulus()));
    return r;
  }();
  std::vector<std::pair<unsigned, const GridFunction*>> fs;
  for (unsigned w = 0; w < (1U << spec.s()); ++w) fs.emplace_back(w, &f);
  return cube_average(fs, u, spec.M, exec);
}

double box_norm(const GridFunction& f, const BoxSpec& spec, Exec exec) {
  return root(box_power(f, spec, exec), spec.s());
}

HPlan plan_h(std::size_t t, std::int64_t H, double cost_per_h, const Sampling& sampling) {
  HPlan plan;
  const double total = std::pow(static_cast<double>(H), static_cast<double>(t));
  const double per_stratum = std::floor(sampling.budget / (std::max(cost_per_h, 1.0) * static_cast<double>(H)));
  const double sampled = static_cast<double>(H) * std::max(2.0, per_stratum);
  if (total * cost_per_h <= sampling.budget || t <= 1 || total <= sampled) {
    if (sampling.require_exhaustive && total * cost_per_h > sampling.budget) {
      fail(Errc::BudgetExceeded, "exhaustive average needs " + std::to_string(total * cost_per_h) +
                                     " term evaluations, budget " + std::to_string(sampling.budget));
    }
    if (total > 1e8) fail(Errc::BudgetExceeded, "parameter box [H]^t is too large to enumerate");
    const auto n = static_cast<std::uint64_t>(std::llround(total));
    for (std::uint64_t k = 0; k < n; ++k) {
      plan.points.push_back(polysys::parameter_point(k, t, H));
      plan.stratum.push_back(t == 0 ? 0 : static_cast<std::size_t>(plan.points.back()[0] - 1));
    }
    return plan;
  }
  if (sampling.require_exhaustive) {
    fail(Errc::BudgetExceeded, "exhaustive average needs " + std::to_string(total * cost_per_h) +
                                   " term evaluations, budget " + std::to_string(sampling.budget));
  }
  plan.exhaustive = false;
  const auto m = static_cast<std::uint64_t>(std::max(2.0, per_stratum));
  std::mt19937_64 rng(sampling.seed);
  std::uniform_int_distribution<std::int64_t> pick(1, H);
  for (std::int64_t h1 = 1; h1 <= H; ++h1) {
    for (std::uint64_t k = 0; k < m; ++k) {
      std::vector<std::int64_t> h(t);
      h[0] = h1;
      for (std::size_t i = 1; i < t; ++i) h[i] = pick(rng);
      plan.points.push_back(std::move(h));
      plan.stratum.push_back(static_cast<std::size_t>(h1 - 1));
    }
  }
  return plan;
}

NormEstimate avg_box_norm(const GridFunction& f, const AvgBoxSpec& spec, const Sampling& sampling) {
  spec.validate(f.dimension());
  const HPlan plan = plan_h(spec.t(), spec.H, spec_cost(spec, f), sampling);
  std::vector<std::pair<unsigned, const GridFunction*>> fs;
  for (unsigned w = 0; w < (1U << spec.s()); ++w) fs.emplace_back(w, &f);

  std::vector<double> vals;
  vals.reserve(plan.points.size());
  for (const auto& h : plan.points) vals.push_back(cube_average(fs, directions_at(spec, h, f.modulus()), spec.M, sampling.exec));

  NormEstimate est;
  double sum = 0.0;
  for (double v : vals) sum += v;
  est.power = sum / static_cast<double>(vals.size());
  est.exhaustive = plan.exhaustive;
  est.h_evaluated = vals.size();
  if (!plan.exhaustive) {
    // Equal strata: the plain mean is the stratified estimate.
    const auto H = static_cast<std::size_t>(spec.H);
    std::vector<double> s1(H, 0.0), s2(H, 0.0), cnt(H, 0.0);
    for (std::size_t k = 0; k < vals.size(); ++k) {
      s1[plan.stratum[k]] += vals[k];
      s2[plan.stratum[k]] += vals[k] * vals[k];
      cnt[plan.stratum[k]] += 1.0;
    }
    double var = 0.0;
    for (std::size_t k = 0; k < H; ++k) {
      const double m = s1[k] / cnt[k];
      const double vk = std::max(0.0, s2[k] / cnt[k] - m * m) * cnt[k] / (cnt[k] - 1.0);
      var += vk / cnt[k] / static_cast<double>(H * H);
    }
    est.std_error = std::sqrt(var);
  }
  est.norm = root(est.power, spec.s());
  return est;
}

double gowers_inner(const CubeFamily& family, const BoxSpec& spec, Exec exec) {
  if (family.empty()) fail(Errc::IncompleteFamily, "empty family");
  const GridFunction& g = family.begin()->second;
  spec.validate(g.dimension());
  std::vector<std::pair<unsigned, const GridFunction*>> fs;
  for (unsigned w = 0; w < (1U << spec.s()); ++w) {
    auto it = family.find(w);
    if (it == family.end()) fail(Errc::IncompleteFamily, "family misses vertex " + std::to_string(w));
    if (!it->second.same_shape(g)) fail(Errc::DimensionMismatch, "family members live on different grids");
    fs.emplace_back(w, &it->second);
  }
  std::vector<std::vector<std::int64_t>> u;
  for (const auto& v : spec.directions) u.push_back(reduce(v, g.modulus()));
  return cube_average(fs, u, spec.M, exec);
}

GridFunction dual_function(const CubeFamily& family, const AvgBoxSpec& spec, const Sampling& sampling) {
  if (family.empty()) fail(Errc::IncompleteFamily, "empty family");
  const GridFunction& g = family.begin()->second;
  spec.validate(g.dimension());
  const std::int64_t N = g.modulus();
  const int d = g.dimension();
  std::vector<std::pair<unsigned, const GridFunction*>> fs;
  for (unsigned w = 1; w < (1U << spec.s()); ++w) {
    auto it = family.find(w);
    if (it == family.end()) fail(Errc::IncompleteFamily, "family misses vertex " + std::to_string(w));
    if (!it->second.same_shape(g)) fail(Errc::DimensionMismatch, "family members live on different grids");
    fs.emplace_back(w, &it->second);
  }
  const HPlan plan = plan_h(spec.t(), spec.H, spec_cost(spec, g), sampling);
  GridFunction D(d, N, 0.0);
  const double hw = 1.0 / static_cast<double>(plan.points.size());
  std::vector<Term> terms(fs.size());
  for (const auto& h : plan.points) {
    const auto u = directions_at(spec, h, N);
    for_each_difference(spec.s(), spec.M, [&](double w, const std::vector<std::int64_t>& e) {
      for (std::size_t k = 0; k < fs.size(); ++k) terms[k] = Term{fs[k].second, vertex_offset(fs[k].first, e, u, N, d)};
      product_accumulate(terms, w * hw, D, sampling.exec);
    });
  }
  return D;
}

CubeFamily constant_family(const GridFunction& f, std::size_t s, bool include_zero) {
  CubeFamily fam;
  for (unsigned w = include_zero ? 0 : 1; w < (1U << s); ++w) fam.emplace(w, f);
  return fam;
}

double lambda_average(const std::vector<ScalarPoly>& P, const std::vector<std::vector<std::int64_t>>& V,
                      const std::vector<const GridFunction*>& fns, std::int64_t M, Exec exec) {
  if (P.size() != V.size() || P.size() != fns.size() || P.empty()) {
    fail(Errc::DimensionMismatch, "need one direction and one function per polynomial");
  }
  if (M < 1) fail(Errc::InvalidArgument, "M must be >= 1");
  const GridFunction& g = *fns.front();
  const std::int64_t N = g.modulus();
  const int d = g.dimension();
  for (const auto& v : V) {
    if (static_cast<int>(v.size()) != d) fail(Errc::DimensionMismatch, "direction length differs from grid dimension");
  }
  double total = 0.0;
  std::vector<Term> terms(P.size());
  for (std::int64_t y = 1; y <= M; ++y) {
    for (std::size_t j = 0; j < P.size(); ++j) {
      const std::int64_t pv = P[j].eval_mod(y, N);
      std::vector<std::int64_t> o(d);
      for (int k = 0; k < d; ++k) {
        o[k] = static_cast<std::int64_t>(static_cast<__int128>(pv) * mod_floor(V[j][k], N) % N);
      }
      terms[j] = Term{fns[j], std::move(o)};
    }
    total += product_mean(terms, exec);
  }
  return total / static_cast<double>(M);
}

}  // namespace polyprimes::grid
