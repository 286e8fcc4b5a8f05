#include <vector>

#include "polyprimes/grid/kernels.hpp"

namespace polyprimes::grid::parallel {

namespace {

// Per-term lookup tables: the shifted index of x is base[x_1] + rest[r],
// where r is the flat index of (x_2, ..., x_d).
struct ShiftTables {
  std::vector<std::vector<std::size_t>> base;
  std::vector<std::vector<std::size_t>> rest;
  std::vector<const double*> data;
  std::size_t row = 1;

  ShiftTables(std::span<const Term> terms, const GridFunction& g) {
    const std::int64_t N = g.modulus();
    const int d = g.dimension();
    row = g.size() / static_cast<std::size_t>(N);
    for (const auto& t : terms) {
      std::vector<std::size_t> b(static_cast<std::size_t>(N));
      for (std::int64_t x = 0; x < N; ++x) b[x] = static_cast<std::size_t>(mod_floor(x + t.offset[0], N)) * row;
      std::vector<std::size_t> r(row, 0);
      // Axis i > 0 contributes ((x_i + o_i) mod N) * stride_i, built axis by axis.
      std::size_t stride = row;
      for (int i = 1; i < d; ++i) {
        stride /= static_cast<std::size_t>(N);
        for (std::size_t k = 0; k < row; ++k) {
          const auto xi = static_cast<std::int64_t>((k / stride) % static_cast<std::size_t>(N));
          r[k] += static_cast<std::size_t>(mod_floor(xi + t.offset[i], N)) * stride;
        }
      }
      base.push_back(std::move(b));
      rest.push_back(std::move(r));
      data.push_back(t.f->values().data());
    }
  }
};

}  // namespace

double product_mean(std::span<const Term> terms) {
  if (terms.empty()) return 1.0;
  const GridFunction& g = *terms.front().f;
  check_terms(terms, g);
  const ShiftTables tab(terms, g);
  const std::int64_t N = g.modulus();
  const std::size_t K = terms.size(), row = tab.row;
  std::vector<double> rows(static_cast<std::size_t>(N));
#pragma omp parallel for schedule(static)
  for (std::int64_t x1 = 0; x1 < N; ++x1) {
    double rs = 0.0;
    for (std::size_t r = 0; r < row; ++r) {
      double p = 1.0;
      for (std::size_t k = 0; k < K; ++k) p *= tab.data[k][tab.base[k][x1] + tab.rest[k][r]];
      rs += p;
    }
    rows[x1] = rs;
  }
  double total = 0.0;
  for (double v : rows) total += v;
  return total / static_cast<double>(g.size());
}

void product_accumulate(std::span<const Term> terms, double weight, GridFunction& out) {
  check_terms(terms, out);
  const ShiftTables tab(terms, out);
  const std::int64_t N = out.modulus();
  const std::size_t K = terms.size(), row = tab.row;
  double* o = out.values().data();
#pragma omp parallel for schedule(static)
  for (std::int64_t x1 = 0; x1 < N; ++x1) {
    for (std::size_t r = 0; r < row; ++r) {
      double p = weight;
      for (std::size_t k = 0; k < K; ++k) p *= tab.data[k][tab.base[k][x1] + tab.rest[k][r]];
      o[static_cast<std::size_t>(x1) * row + r] += p;
    }
  }
}

}  // namespace polyprimes::grid::parallel
