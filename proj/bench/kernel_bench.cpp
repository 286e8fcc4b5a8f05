// Serial reference kernels against their OpenMP counterparts. The reference
// recomputes every shifted index; the OpenMP kernels stream rows, so the
// one-thread runs separate the layout gain from the thread gain.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "polyprimes/grid/kernels.hpp"
#include "polyprimes/grid/norms.hpp"

using namespace polyprimes;
using namespace polyprimes::grid;

namespace {

GridFunction random_grid(int d, std::int64_t N, unsigned seed) {
  GridFunction f(d, N);
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& v : f.values()) v = u(gen);
  return f;
}

// Pins the OpenMP team size for one benchmark run; 0 leaves the default.
struct Threads {
  int saved = omp_get_max_threads();
  explicit Threads(int n) {
    if (n > 0) omp_set_num_threads(n);
  }
  ~Threads() { omp_set_num_threads(saved); }
};

// Range arguments: dimension, modulus.
struct Fixture {
  GridFunction a, b, c;
  std::vector<Term> terms;
  explicit Fixture(const benchmark::State& st)
      : a(random_grid(static_cast<int>(st.range(0)), st.range(1), 1)),
        b(random_grid(static_cast<int>(st.range(0)), st.range(1), 2)),
        c(random_grid(static_cast<int>(st.range(0)), st.range(1), 3)) {
    const auto d = static_cast<std::size_t>(st.range(0));
    terms = {{&a, std::vector<std::int64_t>(d, 0)}, {&b, std::vector<std::int64_t>(d, 3)},
             {&c, std::vector<std::int64_t>(d, 7)}};
  }
};

template <Exec E, int T = 0>
void BM_product_mean(benchmark::State& st) {
  Threads th(T);
  Fixture fx(st);
  for (auto _ : st) benchmark::DoNotOptimize(product_mean(fx.terms, E));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(fx.a.size()));
}

template <Exec E, int T = 0>
void BM_product_accumulate(benchmark::State& st) {
  Threads th(T);
  Fixture fx(st);
  GridFunction out(fx.a.dimension(), fx.a.modulus());
  for (auto _ : st) {
    product_accumulate(fx.terms, 0.5, out, E);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(fx.a.size()));
}

template <Exec E>
void BM_box_power(benchmark::State& st) {
  auto f = random_grid(1, st.range(0), 4);
  BoxSpec spec{{{1}, {3}}, 4};
  for (auto _ : st) benchmark::DoNotOptimize(box_power(f, spec, E));
}

}  // namespace

BENCHMARK(BM_product_mean<Exec::Serial>)->Args({1, 1 << 20})->Args({2, 1024})->Args({3, 101});
BENCHMARK(BM_product_mean<Exec::Parallel, 1>)->Args({1, 1 << 20})->Args({2, 1024})->Args({3, 101});
BENCHMARK(BM_product_mean<Exec::Parallel>)->Args({1, 1 << 20})->Args({2, 1024})->Args({3, 101});
BENCHMARK(BM_product_accumulate<Exec::Serial>)->Args({1, 1 << 20})->Args({2, 1024});
BENCHMARK(BM_product_accumulate<Exec::Parallel, 1>)->Args({1, 1 << 20})->Args({2, 1024});
BENCHMARK(BM_product_accumulate<Exec::Parallel>)->Args({1, 1 << 20})->Args({2, 1024});
BENCHMARK(BM_box_power<Exec::Serial>)->Arg(10007);
BENCHMARK(BM_box_power<Exec::Parallel>)->Arg(10007);

BENCHMARK_MAIN();
