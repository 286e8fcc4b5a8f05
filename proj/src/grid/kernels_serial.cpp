#include <string>

#include "polyprimes/error.hpp"
#include "polyprimes/grid/kernels.hpp"

namespace polyprimes::grid {

void check_terms(std::span<const Term> terms, const GridFunction& like) {
  for (const auto& t : terms) {
    if (t.f == nullptr || !t.f->same_shape(like)) fail(Errc::DimensionMismatch, "functions live on different grids");
    if (static_cast<int>(t.offset.size()) != like.dimension()) {
      fail(Errc::DimensionMismatch, "offset of length " + std::to_string(t.offset.size()) + " on a grid of dimension " +
                                        std::to_string(like.dimension()));
    }
  }
}

namespace serial {

namespace {

// Index of x + o with x given by its flat index.
std::size_t shifted(std::size_t idx, const std::vector<std::int64_t>& o, std::int64_t N, int d) {
  std::size_t out = 0, mul = 1;
  for (int i = d - 1; i >= 0; --i) {
    const auto xi = static_cast<std::int64_t>(idx % static_cast<std::size_t>(N));
    idx /= static_cast<std::size_t>(N);
    out += static_cast<std::size_t>(mod_floor(xi + o[i], N)) * mul;
    mul *= static_cast<std::size_t>(N);
  }
  return out;
}

}  // namespace

double product_mean(std::span<const Term> terms) {
  if (terms.empty()) return 1.0;
  const GridFunction& g = *terms.front().f;
  check_terms(terms, g);
  const std::int64_t N = g.modulus();
  const int d = g.dimension();
  const std::size_t row = g.size() / static_cast<std::size_t>(N);
  double total = 0.0;
  for (std::int64_t x1 = 0; x1 < N; ++x1) {
    double rs = 0.0;
    for (std::size_t r = 0; r < row; ++r) {
      const std::size_t idx = static_cast<std::size_t>(x1) * row + r;
      double p = 1.0;
      for (const auto& t : terms) p *= (*t.f)[shifted(idx, t.offset, N, d)];
      rs += p;
    }
    total += rs;
  }
  return total / static_cast<double>(g.size());
}

void product_accumulate(std::span<const Term> terms, double weight, GridFunction& out) {
  check_terms(terms, out);
  const std::int64_t N = out.modulus();
  const int d = out.dimension();
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    double p = weight;
    for (const auto& t : terms) p *= (*t.f)[shifted(idx, t.offset, N, d)];
    out[idx] += p;
  }
}

}  // namespace serial

double product_mean(std::span<const Term> terms, Exec exec) {
  return exec == Exec::Serial ? serial::product_mean(terms) : parallel::product_mean(terms);
}

void product_accumulate(std::span<const Term> terms, double weight, GridFunction& out, Exec exec) {
  if (exec == Exec::Serial) {
    serial::product_accumulate(terms, weight, out);
  } else {
    parallel::product_accumulate(terms, weight, out);
  }
}

}  // namespace polyprimes::grid
