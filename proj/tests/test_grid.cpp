#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "polyprimes/error.hpp"
#include "polyprimes/grid/decompose.hpp"
#include "polyprimes/grid/inequalities.hpp"
#include "polyprimes/grid/io.hpp"
#include "polyprimes/grid/von_neumann.hpp"
#include "polyprimes/polysys/family.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace polyprimes;
using namespace polyprimes::grid;
using polysys::IntPoly;
using polysys::PolyFamily;
using polysys::VecPoly;

namespace {

std::optional<Errc> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

std::vector<std::vector<std::int64_t>> random_dirs(testgen::Rng& r, std::size_t s, int d, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> u;
  for (std::size_t i = 0; i < s; ++i) u.push_back(testgen::nonzero_vector(r, d, bound));
  return u;
}

// d = 1 family Q_j(h) = c_j h_1 over one parameter.
AvgBoxSpec linear_spec(std::vector<long> c, std::int64_t H, std::int64_t M) {
  AvgBoxSpec spec;
  spec.q = PolyFamily{1, {{1}}, {"h1"}, {}};
  for (long cj : c) spec.q.polys.push_back(VecPoly({IntPoly::variable(2, 1) * mpz_class(cj)}));
  spec.H = H;
  spec.M = M;
  return spec;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree bit for bit") {
  testgen::Rng r(1);
  for (int i = 0; i < 30; ++i) {
    const int d = static_cast<int>(r.integer(1, 3));
    const std::int64_t N = r.integer(2, d == 3 ? 12 : 40);
    auto f = testgen::random_grid(r, d, N), g = testgen::random_grid(r, d, N);
    std::vector<Term> terms{{&f, std::vector<std::int64_t>(d, 0)}, {&g, testgen::nonzero_vector(r, d, 50)}};
    CHECK(serial::product_mean(terms) == parallel::product_mean(terms));
    GridFunction a(d, N), b(d, N);
    serial::product_accumulate(terms, 0.7, a);
    parallel::product_accumulate(terms, 0.7, b);
    CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  }
  GridFunction f(1, 5), g(2, 5);
  std::vector<Term> bad{{&f, {0}}, {&g, {0, 0}}};
  CHECK(code_of([&] { check_terms(bad, f); }) == Errc::DimensionMismatch);
}

TEST_CASE("lambda_average") {
  GridFunction one(1, 7, 1.0);
  CHECK(lambda_average({ScalarPoly(), ScalarPoly({0, 1})}, {{1}, {1}}, {&one, &one}, 4) == doctest::Approx(1.0));

  GridFunction ind(1, 5, 0.0);
  ind[0] = 1.0;
  CHECK(lambda_average({ScalarPoly(), ScalarPoly({0, 1})}, {{1}, {1}}, {&ind, &ind}, 1) == 0.0);

  testgen::Rng r(2);
  for (int i = 0; i < 50; ++i) {
    const int d = static_cast<int>(r.integer(1, 2));
    const std::int64_t N = r.integer(2, d == 1 ? 101 : 15), M = r.integer(1, 6);
    const int l = static_cast<int>(r.integer(1, 3));
    std::vector<ScalarPoly> P{ScalarPoly()};
    std::vector<std::vector<std::int64_t>> C{{}}, V{testgen::nonzero_vector(r, d, 4)};
    std::vector<GridFunction> fs{testgen::random_grid(r, d, N, 0.0, 1.0)};
    for (int j = 1; j <= l; ++j) {
      P.push_back(testgen::scalar_poly(r, static_cast<unsigned>(r.integer(1, 3)), 4));
      C.push_back(P.back().coeffs);
      V.push_back(testgen::nonzero_vector(r, d, 4));
      fs.push_back(testgen::random_grid(r, d, N, 0.0, 1.0));
    }
    std::vector<const GridFunction*> ptr;
    for (const auto& f : fs) ptr.push_back(&f);
    const double got = lambda_average(P, V, ptr, M);
    CHECK(oracle::close_rel(got, oracle::lambda(C, V, ptr, M), 1e-12));
    CHECK(got == lambda_average(P, V, ptr, M, Exec::Serial));

    // Linear in f_0.
    GridFunction f0b = testgen::random_grid(r, d, N), sum = fs[0];
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += f0b[k];
    auto p2 = ptr, p3 = ptr;
    p2[0] = &f0b;
    p3[0] = &sum;
    const double lin = got + lambda_average(P, V, p2, M);
    CHECK(std::abs(lambda_average(P, V, p3, M) - lin) <= 1e-12 * std::max(1.0, std::abs(lin)));
  }
}

TEST_CASE("box norm") {
  GridFunction c(2, 6, -0.75);
  BoxSpec spec{{{1, 2}, {3, 1}}, 3};
  CHECK(box_norm(c, spec) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(box_norm(GridFunction(2, 6), spec) == 0.0);

  testgen::Rng r(4);
  for (int i = 0; i < 40; ++i) {
    const int d = static_cast<int>(r.integer(1, 2));
    const std::int64_t N = r.integer(2, d == 1 ? 101 : 12), M = r.integer(1, 6);
    const std::size_t s = static_cast<std::size_t>(r.integer(1, d == 1 ? 3 : 2));
    auto f = testgen::random_grid(r, d, N, 0.0, 1.0);
    BoxSpec bs{random_dirs(r, s, d, 5), M};
    CHECK(oracle::close_rel(box_norm(f, bs), oracle::box_norm(f, bs.directions, M), 1e-12));
    CHECK(box_norm(f, bs, Exec::Serial) == box_norm(f, bs, Exec::Parallel));
    // Homogeneity.
    GridFunction g = f;
    for (auto& v : g.values()) v *= -2.5;
    CHECK(oracle::close_rel(box_norm(g, bs), 2.5 * box_norm(f, bs), 1e-10));
  }

  // s = 1: (E_x (E_{y in [M]} f(x + y u))^2)^(1/2).
  auto f = testgen::random_grid(r, 1, 31);
  double acc = 0.0;
  for (std::int64_t x = 0; x < 31; ++x) {
    double inner = 0.0;
    for (std::int64_t y = 1; y <= 4; ++y) inner += f[static_cast<std::size_t>((x + 3 * y) % 31)];
    acc += (inner / 4) * (inner / 4);
  }
  CHECK(box_norm(f, BoxSpec{{{3}}, 4}) == doctest::Approx(std::sqrt(acc / 31)).epsilon(1e-12));
  CHECK(code_of([] { box_norm(GridFunction(1, 5), BoxSpec{{}, 2}); }).has_value());
}

TEST_CASE("averaged box norm") {
  GridFunction c(1, 13, 0.4);
  CHECK(avg_box_norm(c, linear_spec({1, 2}, 3, 2)).norm == doctest::Approx(0.4).epsilon(1e-12));

  testgen::Rng r(6);
  auto f = testgen::random_grid(r, 1, 17);
  // Q constant in h: the average collapses to a single box.
  AvgBoxSpec flat;
  flat.q = PolyFamily{1, {{1}}, {"h1"}, {VecPoly({IntPoly::constant(2, 3)}), VecPoly({IntPoly::constant(2, 5)})}};
  flat.H = 4;
  flat.M = 3;
  CHECK(avg_box_norm(f, flat).norm == doctest::Approx(box_norm(f, BoxSpec{{{3}, {5}}, 3})).epsilon(1e-12));

  // Exhaustive average equals the mean of single boxes.
  auto spec = linear_spec({1, 3}, 3, 2);
  double p = 0.0;
  for (std::int64_t h = 1; h <= 3; ++h) p += box_power(f, BoxSpec{{{h}, {3 * h}}, 2});
  CHECK(avg_box_norm(f, spec).power == doctest::Approx(p / 3).epsilon(1e-12));

  for (int i = 0; i < 30; ++i) {
    auto a = testgen::random_grid(r, 1, 23), b = testgen::random_grid(r, 1, 23);
    GridFunction ab = a;
    for (std::size_t k = 0; k < ab.size(); ++k) ab[k] += b[k];
    auto sp = linear_spec({1, static_cast<long>(r.integer(2, 4))}, 3, static_cast<std::int64_t>(r.integer(1, 4)));
    CHECK(avg_box_norm(ab, sp).norm <= (avg_box_norm(a, sp).norm + avg_box_norm(b, sp).norm) * (1 + 1e-9));
  }

  // Sampling is seeded, stratified and reports an error bar.
  // With one parameter every stratum is a single h, so sampling needs t >= 2.
  Sampling sm;
  sm.budget = 2000;
  AvgBoxSpec big;
  big.q = PolyFamily{1, {{1}}, {"h1", "h2"}, {}};
  big.q.polys.push_back(VecPoly({IntPoly::variable(3, 1)}));
  big.q.polys.push_back(VecPoly({IntPoly::variable(3, 2) * mpz_class(2)}));
  big.H = 40;
  big.M = 2;
  auto e1 = avg_box_norm(f, big, sm), e2 = avg_box_norm(f, big, sm);
  CHECK_FALSE(e1.exhaustive);
  CHECK(e1.power == e2.power);
  CHECK(e1.std_error > 0.0);
  sm.require_exhaustive = true;
  CHECK(code_of([&] { avg_box_norm(f, big, sm); }) == Errc::BudgetExceeded);

  AvgBoxSpec zero_proj = linear_spec({0}, 2, 2);
  CHECK(code_of([&] { avg_box_norm(f, zero_proj); }).has_value());
}

TEST_CASE("plan_h") {
  Sampling sm;
  sm.budget = 1e6;
  auto all = plan_h(2, 5, 10.0, sm);
  CHECK(all.exhaustive);
  CHECK(all.points.size() == 25);
  sm.budget = 200;
  auto part = plan_h(2, 10, 10.0, sm);
  CHECK_FALSE(part.exhaustive);
  std::vector<int> per(10, 0);
  for (std::size_t k = 0; k < part.points.size(); ++k) {
    CHECK(part.stratum[k] == static_cast<std::size_t>(part.points[k][0] - 1));
    ++per[part.stratum[k]];
  }
  for (int c : per) CHECK(c >= 2);
  CHECK(plan_h(2, 10, 10.0, sm).points == part.points);
}

TEST_CASE("gowers inner product and Cauchy-Schwarz") {
  testgen::Rng r(8);
  for (int i = 0; i < 40; ++i) {
    const std::int64_t N = r.integer(3, 40), M = r.integer(1, 4);
    const std::size_t s = static_cast<std::size_t>(r.integer(1, 3));
    BoxSpec spec{random_dirs(r, s, 1, 6), M};
    CubeFamily fam;
    std::vector<GridFunction> store;
    for (unsigned w = 0; w < (1u << s); ++w) fam[w] = testgen::random_grid(r, 1, N);
    std::vector<const GridFunction*> ptr;
    for (auto& [w, f] : fam) ptr.push_back(&f);
    const double inner = gowers_inner(fam, spec);
    CHECK(std::abs(inner - oracle::gowers_inner(ptr, spec.directions, M)) <= 1e-12 * std::max(1.0, std::abs(inner)));
    auto gcs = gowers_cauchy_schwarz(fam, spec);
    CHECK(gcs.holds());

    auto same = constant_family(fam[0], s, true);
    CHECK(gowers_inner(same, spec) == doctest::Approx(box_power(fam[0], spec)).epsilon(1e-12));
    fam[1] = GridFunction(1, N);
    CHECK(gowers_inner(fam, spec) == 0.0);
  }
  CubeFamily partial{{1, GridFunction(1, 5)}};
  CHECK(code_of([&] { gowers_inner(partial, BoxSpec{{{1}}, 2}); }) == Errc::IncompleteFamily);
}

TEST_CASE("dual function") {
  auto spec = linear_spec({1, 2}, 3, 3);
  GridFunction one(1, 19, 1.0);
  auto d1 = dual_function(constant_family(one, 2), spec);
  for (double v : d1.values()) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

  testgen::Rng r(10);
  for (int i = 0; i < 20; ++i) {
    auto f = testgen::random_grid(r, 1, 19);
    auto sp = linear_spec({1, static_cast<long>(r.integer(-3, -1))}, static_cast<std::int64_t>(r.integer(1, 3)), 3);
    auto D = dual_function(constant_family(f, 2), sp);
    double pair = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) pair += f[k] * D[k];
    pair /= static_cast<double>(f.size());
    CHECK(std::abs(pair - avg_box_norm(f, sp).power) <= 1e-10 * std::max(1e-3, std::abs(pair)));
    CHECK(D.max_abs() <= 1.0 + 1e-12);
  }
}

TEST_CASE("van der Corput check") {
  auto c = vdc_check(std::vector<double>(12, 0.6), 8, 4);
  CHECK(c.lhs_sq == doctest::Approx(0.36));
  CHECK(c.rhs == doctest::Approx(0.36));
  CHECK(c.bound >= 0.0);
  testgen::Rng r(12);
  std::vector<double> eq(10);
  for (auto& v : eq) v = r.real(-1, 1);
  CHECK(vdc_check(eq, 5, 5).holds());
  for (int i = 0; i < 1000; ++i) {
    const std::int64_t M = r.integer(1, 30), H = r.integer(1, M);
    std::vector<double> x(static_cast<std::size_t>(M + H));
    for (auto& v : x) v = r.real(-1, 1);
    CHECK(vdc_check(x, M, H).holds());
  }
  CHECK(code_of([] { vdc_check(std::vector<double>(5, 1.0), 4, 3); }) == Errc::RangeTooShort);
  CHECK(code_of([] { vdc_check(std::vector<double>(20, 1.0), 3, 5); }) == Errc::RangeTooShort);
}

TEST_CASE("orthogonality check") {
  testgen::Rng r(14);
  GridFunction one(1, 11, 1.0);
  auto D = testgen::random_grid(r, 1, 11);
  CHECK(orthogonality_check(one, {D}) == 0.0);
  auto nu = testgen::random_grid(r, 1, 11, 0.0, 3.0);
  CHECK(orthogonality_check(nu, {}) == doctest::Approx(nu.mean() - 1.0));
}

TEST_CASE("dense decomposition") {
  auto spec = linear_spec({1}, 4, 4);
  auto zero = dense_decompose(GridFunction(1, 31), spec);
  CHECK(zero.success);
  CHECK(zero.g.max_abs() == 0.0);
  CHECK(zero.h.max_abs() == 0.0);

  testgen::Rng r(16);
  auto inside = testgen::random_grid(r, 1, 31, 0.0, 2.0);
  auto in = dense_decompose(inside, spec);
  CHECK(in.success);
  CHECK(in.iterations == 0);
  CHECK(in.achieved == 0.0);

  // Sparse spikes of height 12 on a grid of density 1/8: needs boosting.
  GridFunction spikes(1, 64);
  for (std::size_t k = 0; k < 64; k += 8) spikes[k] = 12.0;
  DecomposeOptions o;
  o.epsilon = 0.05;
  o.cap = 60;
  auto res = dense_decompose(spikes, spec, o);
  CHECK(res.iterations > 0);
  for (std::size_t k = 0; k < 64; ++k) {
    CHECK(res.g[k] >= 0.0);
    CHECK(res.g[k] <= 2.0);
    CHECK(res.g[k] + res.h[k] == spikes[k]);
  }
  CHECK(res.achieved == doctest::Approx(avg_box_norm(res.h, spec).norm).epsilon(1e-12));
  CHECK(res.achieved <= res.history.front());
  CHECK(res.success == (res.achieved <= o.epsilon));

  GridFunction small_nu(1, 64, 1.0);
  CHECK(code_of([&] { dense_decompose(spikes, spec, o, &small_nu); }) == Errc::MajorantViolated);
}

TEST_CASE("von Neumann probe") {
  std::vector<ScalarPoly> P{ScalarPoly(), ScalarPoly({0, 1})};
  std::vector<std::vector<std::int64_t>> V{{1}, {1}};
  std::vector<polysys::LinearizationCertificate> certs;
  for (int k = 0; k < 2; ++k) certs.push_back(polysys::pet_linearize(polysys::configuration_system(P, V, k)));
  GridFunction one(1, 13, 1.0), zero(1, 13);
  auto a = von_neumann_probe(P, V, {&one, &one}, certs, 3, 3);
  CHECK(a.lambda == doctest::Approx(1.0));
  CHECK(a.min_norm == doctest::Approx(1.0));
  auto b = von_neumann_probe(P, V, {&zero, &one}, certs, 3, 3);
  CHECK(b.lambda == 0.0);
  CHECK(b.min_norm == 0.0);

  auto other = polysys::pet_linearize(polysys::configuration_system({ScalarPoly(), ScalarPoly({0, 2})}, V, 0));
  CHECK(code_of([&] { von_neumann_probe(P, V, {&one, &one}, {other}, 3, 3); }) == Errc::CertificateMismatch);
}

TEST_CASE("grid file formats") {
  testgen::Rng r(18);
  auto f = testgen::random_grid(r, 2, 5);
  std::stringstream csv;
  write_grid_csv(csv, f);
  auto back = read_grid_csv(csv);
  CHECK(back.same_shape(f));
  CHECK(std::equal(f.values().begin(), f.values().end(), back.values().begin()));

  std::stringstream bin;
  write_grid_binary(bin, f);
  auto bb = read_grid_binary(bin);
  CHECK(std::equal(f.values().begin(), f.values().end(), bb.values().begin()));

  std::stringstream bad("x1,value\n0,1\n0,2\n");
  CHECK(code_of([&] { read_grid_csv(bad); }) == Errc::ParseError);

  save_grid("test_grid.csv", f);
  CHECK(load_grid("test_grid.csv").values()[7] == f[7]);
  std::remove("test_grid.csv");

  auto spec = linear_spec({1, -2}, 5, 3);
  auto sj = avg_spec_from_json(avg_spec_to_json(spec));
  CHECK(sj.H == 5);
  CHECK(sj.M == 3);
  CHECK(sj.q.polys == spec.q.polys);
}
