// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Arguments restrict the run to the listed criterion numbers.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>

#include "polyprimes/error.hpp"
#include "polyprimes/grid/decompose.hpp"
#include "polyprimes/grid/inequalities.hpp"
#include "polyprimes/polysys/family.hpp"
#include "polyprimes/polysys/pet.hpp"
#include "polyprimes/search/search.hpp"
#include "polyprimes/sieve/context.hpp"
#include "polyprimes/sieve/correlation.hpp"
#include "polyprimes/sieve/majorant.hpp"
#include "polyprimes/sieve/prime_table.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace polyprimes;
using namespace polyprimes::grid;
using polysys::IntPoly;
using polysys::PolyFamily;
using polysys::ShiftPolySystem;
using polysys::VecPoly;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

GridFunction sum(const GridFunction& a, const GridFunction& b) {
  GridFunction out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
  return out;
}

double inner(const GridFunction& a, const GridFunction& b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc / static_cast<double>(a.size());
}

ShiftPolySystem worked_example() {
  ShiftPolySystem s;
  s.dimension = 2;
  s.directions = {{1, 1}, {1, 2}};
  s.nodes.push_back({0, VecPoly(2, 1), true, "f0", std::nullopt, 0});
  s.nodes.push_back({1, VecPoly({IntPoly::y_power(1, 1), IntPoly(1)}), true, "f1", std::nullopt, 0});
  s.nodes.push_back({2, VecPoly({IntPoly(1), IntPoly::y_power(1, 2)}), true, "f2", std::nullopt, 0});
  s.distinguished = 2;
  return s;
}

// ---------------------------------------------------------------------------
// 1. PET descent and termination.

// Systems past this many nodes are counted as not terminating; every corpus
// system that finishes does so below 100 nodes.
constexpr std::size_t kPetNodeCap = 512;

Outcome pet_descent() {
  const auto t0 = std::chrono::steady_clock::now();
  testgen::Rng r(20240611);
  std::vector<ShiftPolySystem> corpus{worked_example()};
  for (int i = 0; i < 200; ++i) corpus.push_back(testgen::configuration(r, 3, 3, 3));

  std::size_t finished = 0, budget = 0, other = 0, bad_weight = 0, bad_b = 0, max_nodes = 0;
  polysys::PetOptions opts;
  opts.node_cap = kPetNodeCap;
  for (const auto& s : corpus) {
    try {
      auto cert = polysys::pet_linearize(s, opts);
      ++finished;
      max_nodes = std::max(max_nodes, cert.final_system.nodes.size());
      for (const auto& st : cert.steps) {
        if (!polysys::weight_less(st.weight_after, st.weight_before)) ++bad_weight;
      }
      for (std::size_t k = 0; k + 1 < cert.steps.size(); ++k) {
        // A handed-over node is the next step's choice at the same weight.
        if (cert.steps[k].after_is_nonlinear && !(cert.steps[k + 1].weight_before == cert.steps[k].weight_after)) {
          ++bad_weight;
        }
      }
      for (const auto& lp : cert.linear) {
        for (int c = 0; c < cert.final_system.dimension; ++c) {
          if (polysys::project(lp.b, cert.final_system.directions, static_cast<std::size_t>(c)).is_zero()) ++bad_b;
        }
      }
    } catch (const Error& e) {
      if (e.code() == Errc::BudgetExceeded) {
        ++budget;
      } else {
        ++other;
      }
    }
  }
  const double secs = seconds_since(t0);
  const bool pass = finished == corpus.size() && bad_weight == 0 && bad_b == 0 && secs < 60.0;
  return {pass, fmt("%zu/%zu terminated (%zu over the %zu-node cap, %zu other errors), weight violations %zu, "
                    "vanishing b projections %zu, largest finished system %zu nodes, %.1f s (target < 60 s)",
                    finished, corpus.size(), budget, kPetNodeCap, other, bad_weight, bad_b, max_nodes, secs)};
}

// ---------------------------------------------------------------------------
// 2. Doubling preserves general position.

Outcome doubling() {
  testgen::Rng r(3101);
  std::size_t plain = 0, plain_bad = 0, wrt = 0, wrt_bad = 0;
  // Plain general position: doubling applied to a shifted system, as PET does.
  while (plain < 250) {
    auto s = testgen::general_system(r);
    const int a = s.nodes[static_cast<std::size_t>(r.integer(0, static_cast<std::int64_t>(s.nodes.size()) - 1))].id;
    auto db = polysys::double_system(polysys::shift_system(s, a));
    ++plain;
    if (!polysys::is_general_position(db)) ++plain_bad;
  }
  // General position with respect to the distinguished node, along two
  // successive shift-and-double steps at random nonlinear nodes.
  while (wrt < 250) {
    auto s = testgen::configuration(r, 3, 3, 3);
    for (int depth = 0; depth < 2 && wrt < 250; ++depth) {
      auto nl = polysys::active_nonlinear_nodes(s, *s.distinguished);
      if (nl.empty() || s.nodes.size() > 64) break;
      const int a = nl[static_cast<std::size_t>(r.integer(0, static_cast<std::int64_t>(nl.size()) - 1))];
      s = polysys::double_system(polysys::shift_system(s, a));
      ++wrt;
      if (!polysys::is_general_position_wrt(s, *s.distinguished)) ++wrt_bad;
    }
  }
  return {plain_bad + wrt_bad == 0, fmt("%zu doublings: %zu general-position violations, %zu doublings w.r.t. the "
                                        "distinguished node: %zu violations",
                                        plain, plain_bad, wrt, wrt_bad)};
}

// ---------------------------------------------------------------------------
// 3 and 4. Majorant mean and correlation separation.

struct NuRun {
  sieve::SieveContext ctx;
  std::vector<double> nu;
  double secs = 0.0;
};

const NuRun& nu_million() {
  static const NuRun run = [] {
    const auto t0 = std::chrono::steady_clock::now();
    NuRun out;
    out.ctx = sieve::make_context(1'000'000, 0.1, 2);
    sieve::set_residues(out.ctx, {1});
    auto pt = sieve::build_prime_table(out.ctx.max_value());
    out.nu = sieve::nu_axis(out.ctx, 1, pt);
    out.secs = seconds_since(t0);
    return out;
  }();
  return run;
}

Outcome majorant_mean() {
  // Oracle cross-check at N' = 1e4 by direct divisor enumeration.
  auto small = sieve::make_context(10'000, 0.1, 2);
  auto pts = sieve::build_prime_table(small.max_value());
  auto nus = sieve::nu_axis(small, 1, pts);
  double worst = 0.0;
  for (std::int64_t x = 0; x <= small.N; ++x) {
    const double s = oracle::divisor_sum(2 * x + 1, small.R, [](double t) { return sieve::chi(t); });
    worst = std::max(worst, std::abs(nus[static_cast<std::size_t>(x)] - small.nu_scale() * s * s));
  }

  const auto& run = nu_million();
  const double mean = sieve::correlation_average(run.nu, {0});
  const double tau = 0.15;
  const bool pass = std::abs(mean - 1.0) <= tau && worst <= 1e-12 && run.secs < 120.0;
  return {pass, fmt("N'=1e6 eps0=0.1 w=2 b=1: R=%lld, mean(nu)=%.5f, |mean-1|=%.5f (tolerance %.2f), "
                    "oracle max deviation at N'=1e4 %.2e, %.1f s (target < 120 s)",
                    static_cast<long long>(run.ctx.R), mean, std::abs(mean - 1.0), tau, worst, run.secs)};
}

Outcome correlation_separation() {
  const auto& run = nu_million();
  const double square = sieve::correlation_average(run.nu, {0, 0}) - 1.0;
  double worst = 0.0;
  std::string shifted;
  for (std::int64_t h : {1, 3, 5}) {
    const double c = sieve::correlation_average(run.nu, {0, h}) - 1.0;
    worst = std::max(worst, std::abs(c));
    shifted += fmt(" h=%lld: %.5f", static_cast<long long>(h), c);
  }
  return {square >= 3.0 * worst,
          fmt("mean(nu^2)-1=%.5f, mean(nu*nu(.+h))-1:%s; need %.5f >= 3 * %.5f", square, shifted.c_str(), square,
              worst)};
}

// ---------------------------------------------------------------------------
// 5. Exact inequalities.

constexpr double kSlack = 1e-9;

std::vector<std::vector<std::int64_t>> random_dirs(testgen::Rng& r, std::size_t s, int d, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> u;
  for (std::size_t i = 0; i < s; ++i) u.push_back(testgen::nonzero_vector(r, d, bound));
  return u;
}

double pow_int(std::int64_t b, std::size_t e) { return std::pow(static_cast<double>(b), static_cast<double>(e)); }

// Random shape with work N^d M^(2s) H^t kept under the cap.
struct Shape {
  int d = 1;
  std::int64_t N = 1, M = 1;
  std::size_t s = 1;
};

Shape draw_shape(testgen::Rng& r, std::int64_t max_N, double cap, double h_factor = 1.0) {
  while (true) {
    Shape sh;
    sh.d = static_cast<int>(r.integer(1, 2));
    sh.N = r.integer(3, sh.d == 1 ? max_N : 23);
    sh.s = static_cast<std::size_t>(r.integer(1, 3));
    sh.M = r.integer(1, 8);
    if (pow_int(sh.N, static_cast<std::size_t>(sh.d)) * pow_int(sh.M, 2 * sh.s) * h_factor <= cap) return sh;
  }
}

Outcome inequalities() {
  testgen::Rng r(5005);
  std::size_t gcs_bad = 0, concat_bad = 0, pair_bad = 0, tri_bad = 0, exp_bad = 0, sum_bad = 0;
  double pair_worst = 0.0;

  for (int i = 0; i < 500; ++i) {
    const auto sh = draw_shape(r, 503, 4e6, 1u << 3);
    BoxSpec spec{random_dirs(r, sh.s, sh.d, 6), sh.M};
    CubeFamily fam;
    for (unsigned w = 0; w < (1u << sh.s); ++w) fam[w] = testgen::random_grid(r, sh.d, sh.N);
    if (!gowers_cauchy_schwarz(fam, spec).holds(kSlack)) ++gcs_bad;
  }

  for (int i = 0; i < 500; ++i) {
    const std::int64_t H = r.integer(1, 3);
    const std::size_t s1 = static_cast<std::size_t>(r.integer(1, 2));
    const std::size_t s2 = static_cast<std::size_t>(r.integer(1, static_cast<std::int64_t>(3 - s1)));
    const int d = static_cast<int>(r.integer(1, 2));
    const std::int64_t N = r.integer(3, d == 1 ? 101 : 13);
    const std::int64_t M = r.integer(1, 8);
    if (pow_int(N, static_cast<std::size_t>(d)) * pow_int(M, 2 * (s1 + s2)) * pow_int(H, 2) > 4e6) {
      --i;
      continue;
    }
    auto q1 = testgen::random_family(r, d, s1, 1), q2 = testgen::random_family(r, d, s2, 1);
    auto f = testgen::random_grid(r, d, N);
    const double whole = avg_box_norm(f, AvgBoxSpec{polysys::concat_systems({q1, q2}), H, M}).norm;
    for (const auto& part : {q1, q2}) {
      if (whole < avg_box_norm(f, AvgBoxSpec{part, H, M}).norm * (1 - kSlack)) ++concat_bad;
    }
  }

  for (int i = 0; i < 500; ++i) {
    const std::int64_t H = r.integer(1, 3);
    const auto sh = draw_shape(r, 503, 4e6, static_cast<double>(H << 3));
    AvgBoxSpec spec{testgen::random_family(r, sh.d, sh.s, 1), H, sh.M};
    auto f = testgen::random_grid(r, sh.d, sh.N);
    const double pair = inner(f, dual_function(constant_family(f, sh.s), spec));
    const double power = avg_box_norm(f, spec).power;
    const double dev = std::abs(pair - power) / std::max({std::abs(pair), std::abs(power), 1e-300});
    pair_worst = std::max(pair_worst, dev);
    if (dev > kSlack) ++pair_bad;
  }

  for (int i = 0; i < 500; ++i) {
    const auto sh = draw_shape(r, 503, 4e6, 3.0);
    BoxSpec spec{random_dirs(r, sh.s, sh.d, 6), sh.M};
    auto a = testgen::random_grid(r, sh.d, sh.N), b = testgen::random_grid(r, sh.d, sh.N);
    if (box_norm(sum(a, b), spec) > (box_norm(a, spec) + box_norm(b, spec)) * (1 + kSlack)) ++tri_bad;
  }

  // Exp(a) Exp(b) = Exp(a + b) - Exp(a) - Exp(b), and Eq. 2.10.
  for (int i = 0; i < 500; ++i) {
    const double a = r.real(0.0, 2.0), b = r.real(0.0, 2.0);
    const double lhs = sieve::exp_fn(a) * sieve::exp_fn(b);
    if (!rel_close(lhs, sieve::exp_fn(a + b) - sieve::exp_fn(a) - sieve::exp_fn(b), kSlack)) ++exp_bad;

    std::vector<double> alpha(static_cast<std::size_t>(r.integer(1, 6)));
    for (auto& x : alpha) x = r.real(0.0, 0.5);
    auto [l, rr] = sieve::exp_sum_bound(alpha);
    if (l > rr * (1 + kSlack)) ++sum_bad;
  }

  const std::size_t bad = gcs_bad + concat_bad + pair_bad + tri_bad + exp_bad + sum_bad;
  return {bad == 0, fmt("500 instances each, failures: Gowers-Cauchy-Schwarz %zu, concatenation %zu, pairing %zu "
                        "(worst relative gap %.1e), triangle %zu, Exp identity %zu, Exp sum bound %zu",
                        gcs_bad, concat_bad, pair_bad, pair_worst, tri_bad, exp_bad, sum_bad)};
}

// ---------------------------------------------------------------------------
// 6. Oracle equivalence.

search::ConfigurationQuery make_query(int d, std::vector<ScalarPoly> P, std::vector<std::vector<std::int64_t>> V,
                                      std::int64_t N, std::int64_t y_max, LatticeSet target) {
  search::ConfigurationQuery q;
  q.dimension = d;
  q.P = std::move(P);
  q.V = std::move(V);
  q.N = N;
  q.y_max = y_max;
  q.target = std::move(target);
  return q;
}

Outcome oracle_equivalence() {
  testgen::Rng r(6006);
  const int instances = 200;
  std::size_t lambda_bad = 0, box_bad = 0, find_bad = 0, hits_total = 0;

  for (int i = 0; i < instances; ++i) {
    const int d = static_cast<int>(r.integer(1, 2));
    const std::int64_t N = r.integer(2, d == 1 ? 101 : 15), M = r.integer(1, 6);
    const int l = static_cast<int>(r.integer(1, 3));
    std::vector<ScalarPoly> P{ScalarPoly()};
    std::vector<std::vector<std::int64_t>> C{{}}, V{testgen::nonzero_vector(r, d, 4)};
    std::vector<GridFunction> fs{testgen::random_grid(r, d, N)};
    for (int j = 1; j <= l; ++j) {
      P.push_back(testgen::scalar_poly(r, static_cast<unsigned>(r.integer(1, 3)), 4));
      C.push_back(P.back().coeffs);
      V.push_back(testgen::nonzero_vector(r, d, 4));
      fs.push_back(testgen::random_grid(r, d, N));
    }
    std::vector<const GridFunction*> ptr;
    for (const auto& f : fs) ptr.push_back(&f);
    if (!rel_close(lambda_average(P, V, ptr, M), oracle::lambda(C, V, ptr, M), 1e-12)) ++lambda_bad;
  }

  for (int i = 0; i < instances; ++i) {
    const int d = static_cast<int>(r.integer(1, 2));
    const std::size_t s = static_cast<std::size_t>(r.integer(1, 3));
    const std::int64_t N = r.integer(2, d == 1 ? 101 : 15);
    const std::int64_t M = r.integer(1, s == 3 ? 4 : 6);
    auto f = testgen::random_grid(r, d, N);
    auto u = random_dirs(r, s, d, 6);
    if (!rel_close(box_norm(f, BoxSpec{u, M}), oracle::box_norm(f, u, M), 1e-12)) ++box_bad;
  }

  for (int i = 0; i < instances; ++i) {
    const int d = static_cast<int>(r.integer(1, 2));
    const std::int64_t N = r.integer(5, d == 1 ? 101 : 30), y_max = r.integer(1, 10);
    const int l = static_cast<int>(r.integer(1, 3));
    std::vector<ScalarPoly> P{ScalarPoly()};
    std::vector<std::vector<std::int64_t>> C{{}}, V{testgen::nonzero_vector(r, d, 2)};
    for (int j = 1; j <= l; ++j) {
      P.push_back(testgen::scalar_poly(r, static_cast<unsigned>(r.integer(1, 2)), 2));
      C.push_back(P.back().coeffs);
      V.push_back(testgen::nonzero_vector(r, d, 2));
    }
    std::function<bool(const std::vector<std::int64_t>&)> member;
    LatticeSet target;
    if (r.integer(0, 1) == 0) {
      target = search::prime_lattice(d, N);
      member = [](const std::vector<std::int64_t>& p) {
        return std::all_of(p.begin(), p.end(), [](std::int64_t v) { return oracle::is_prime(v); });
      };
    } else {
      std::vector<std::vector<std::int64_t>> pts;
      for (auto x : oracle::all_points(d, N)) {
        for (auto& c : x) c += 1;
        if (r.integer(0, 2) == 0) pts.push_back(x);
      }
      target = LatticeSet::explicit_points(d, pts);
      std::sort(pts.begin(), pts.end());
      member = [pts](const std::vector<std::int64_t>& p) { return std::binary_search(pts.begin(), pts.end(), p); };
    }
    auto hits = search::find_configurations(make_query(d, P, V, N, y_max, target));
    std::set<oracle::Hit> got;
    for (const auto& h : hits) got.insert(oracle::Hit{h.y, h.x});
    auto want = oracle::find(d, C, V, N, y_max, member);
    hits_total += want.size();
    if (got != std::set<oracle::Hit>(want.begin(), want.end()) || got.size() != hits.size()) ++find_bad;
  }

  return {lambda_bad + box_bad + find_bad == 0,
          fmt("%d instances each (N <= 101, M <= 6, y_max <= 10): lambda_average mismatches %zu, box_norm "
              "mismatches %zu, find_configurations set mismatches %zu (%zu oracle hits)",
              instances, lambda_bad, box_bad, find_bad, hits_total)};
}

// ---------------------------------------------------------------------------
// 7. Decomposition postconditions.

AvgBoxSpec linear_spec(std::int64_t H, std::int64_t M) {
  AvgBoxSpec spec;
  spec.q = PolyFamily{1, {{1}}, {"h1"}, {VecPoly({IntPoly::variable(2, 1)})}};
  spec.H = H;
  spec.M = M;
  return spec;
}

Outcome decomposition() {
  auto ctx = sieve::make_context(10'000, 0.1);
  auto primes = search::prime_lattice(1, ctx.max_value());
  sieve::set_residues(ctx, sieve::choose_residue(primes, ctx).b);
  auto f = sieve::build_f_A(primes, ctx);
  auto nu = sieve::nu_grid(ctx, sieve::build_prime_table(ctx.max_value()));

  DecomposeOptions opts;
  opts.epsilon = 0.2;
  opts.cap = 500;
  const auto spec = linear_spec(10, 16);
  auto res = dense_decompose(f, spec, opts, &nu);

  std::size_t range_bad = 0, split_bad = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (res.g[k] < 0.0 || res.g[k] > 2.0) ++range_bad;
    if (res.g[k] + res.h[k] != f[k]) ++split_bad;
  }
  const double achieved = avg_box_norm(res.h, spec).norm;
  const bool pass = range_bad == 0 && split_bad == 0 && achieved <= opts.epsilon && res.iterations <= opts.cap;
  return {pass, fmt("N'=1e4 (N=%lld, b=%lld), H=10, M=16: g out of [0,2] at %zu points, f != g+h at %zu points, "
                    "||h|| = %.4g (target <= 0.2) after %zu iterations, mean f_A %.4g",
                    static_cast<long long>(ctx.N), static_cast<long long>(ctx.b[0]), range_bad, split_bad, achieved,
                    res.iterations, f.mean())};
}

// ---------------------------------------------------------------------------
// 8. Configuration existence.

Outcome configuration_existence() {
  const std::int64_t N = 10'000;
  auto q = make_query(2, {ScalarPoly(), ScalarPoly({0, 0, 1})}, {{1, 1}, {1, 2}}, N, 50,
                      search::prime_lattice(2, N));
  search::SearchOptions opts;
  opts.limit = 1000;
  auto hits = search::find_configurations(q, opts);
  std::size_t invalid = 0;
  for (const auto& h : hits) {
    if (!search::revalidate(q, h)) ++invalid;
  }
  auto prof = search::min_y_profile(q);
  std::string hist;
  int shown = 0;
  for (const auto& [y, n] : prof.histogram) {
    if (shown++ == 6) break;
    hist += fmt(" y=%lld:%lld", static_cast<long long>(y), static_cast<long long>(n));
  }
  std::string first = hits.empty() ? "none"
                                   : fmt("x=(%lld,%lld) y=%lld", static_cast<long long>(hits[0].x[0]),
                                         static_cast<long long>(hits[0].x[1]), static_cast<long long>(hits[0].y));
  return {!hits.empty() && invalid == 0,
          fmt("%zu hits listed (limit %zu), %zu fail revalidation, first %s; min-y profile: %zu x with a hit, "
              "largest min y %lld, histogram%s",
              hits.size(), opts.limit, invalid, first.c_str(), prof.x_with_hits(),
              static_cast<long long>(prof.max_min_y), hist.c_str())};
}

// ---------------------------------------------------------------------------
// 9. Orthogonality.

Outcome orthogonality() {
  auto ctx = sieve::make_context(100'000, 0.1, 2);
  sieve::set_residues(ctx, {1});
  auto nu = sieve::nu_grid(ctx, sieve::build_prime_table(ctx.max_value()));
  double total = 0.0, worst = 0.0;
  const int seeds = 20;
  for (int seed = 1; seed <= seeds; ++seed) {
    testgen::Rng r(static_cast<std::uint64_t>(9000 + seed));
    AvgBoxSpec spec{testgen::random_family(r, 1, 2, 1), 4, 3};
    CubeFamily fam;
    for (unsigned w = 1; w < 4; ++w) fam[w] = testgen::random_grid(r, 1, ctx.N);
    const double v = std::abs(orthogonality_check(nu, {dual_function(fam, spec)}));
    total += v;
    worst = std::max(worst, v);
  }
  const double avg = total / seeds;
  return {avg <= 0.2, fmt("N'=1e5 d=1, s=2, H=4, M=3, functions uniform in [-1,1]: mean |E(nu-1)D| over %d seeds "
                          "%.4g (tolerance 0.2), worst seed %.4g",
                          seeds, avg, worst)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"PET descent and termination", pet_descent},
      {"doubling preserves general position", doubling},
      {"majorant mean", majorant_mean},
      {"correlation separation", correlation_separation},
      {"exact inequalities", inequalities},
      {"oracle equivalence", oracle_equivalence},
      {"decomposition postconditions", decomposition},
      {"configuration existence", configuration_existence},
      {"orthogonality", orthogonality},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s %d %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", id, criteria[k].first, o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
