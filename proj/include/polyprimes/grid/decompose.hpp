#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyprimes/grid/norms.hpp"

namespace polyprimes::grid {

struct DecomposeOptions {
  double epsilon = 0.2;
  double eta = 0.25;  // halved after two consecutive increases of the norm
  std::size_t cap = 500;
  Sampling sampling;
};

struct DecompositionResult {
  GridFunction g;  // 0 <= g <= 2
  GridFunction h;  // f - g
  double achieved = 0.0;  // avg_box_norm(h)
  std::size_t iterations = 0;      // boosting steps run
  std::size_t best_iteration = 0;  // step that produced g
  std::size_t duals_used = 0;
  bool success = false;  // achieved <= epsilon
  std::vector<double> history;  // norm after each iterate, starting with g_0
  double final_eta = 0.0;
};

// Boosting: g_0 = clamp(f, 0, 2), then g <- clamp(g + eta D(h / |h|_inf), 0, 2)
// with h = f - g, keeping the best iterate. When nu is given, 0 <= f <= nu is
// checked first (MajorantViolated). Missing the target is reported through
// success = false, not thrown.
DecompositionResult dense_decompose(const GridFunction& f, const AvgBoxSpec& spec, const DecomposeOptions& opts = {},
                                    const GridFunction* nu = nullptr);

}  // namespace polyprimes::grid
