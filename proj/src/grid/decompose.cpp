#include "polyprimes/grid/decompose.hpp"

#include <algorithm>

#include "polyprimes/error.hpp"

namespace polyprimes::grid {

namespace {

GridFunction difference(const GridFunction& f, const GridFunction& g) {
  GridFunction h(f.dimension(), f.modulus(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[i] - g[i];
  return h;
}

}  // namespace

DecompositionResult dense_decompose(const GridFunction& f, const AvgBoxSpec& spec, const DecomposeOptions& opts,
                                    const GridFunction* nu) {
  if (!(opts.epsilon > 0.0)) fail(Errc::InvalidArgument, "epsilon must be positive");
  if (!(opts.eta > 0.0)) fail(Errc::InvalidArgument, "step eta must be positive");
  spec.validate(f.dimension());
  if (nu != nullptr) {
    if (!nu->same_shape(f)) fail(Errc::DimensionMismatch, "f and nu live on different grids");
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0.0 || f[i] > (*nu)[i]) {
        fail(Errc::MajorantViolated, "0 <= f <= nu fails at grid index " + std::to_string(i));
      }
    }
  }

  GridFunction g(f.dimension(), f.modulus(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = std::clamp(f[i], 0.0, 2.0);

  DecompositionResult best;
  best.h = difference(f, g);
  best.achieved = avg_box_norm(best.h, spec, opts.sampling).norm;
  best.g = g;
  best.history.push_back(best.achieved);

  double eta = opts.eta, last = best.achieved;
  int rises = 0;
  GridFunction h = best.h;
  std::size_t it = 0;
  while (best.achieved > opts.epsilon && it < opts.cap) {
    ++it;
    const double scale = h.max_abs();
    if (scale == 0.0) break;
    GridFunction hn = h;
    for (auto& v : hn.values()) v /= scale;
    const GridFunction D = dual_function(constant_family(hn, spec.s()), spec, opts.sampling);
    ++best.duals_used;
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::clamp(g[i] + eta * D[i], 0.0, 2.0);
    h = difference(f, g);
    const double now = avg_box_norm(h, spec, opts.sampling).norm;
    best.history.push_back(now);
    if (now < best.achieved) {
      best.achieved = now;
      best.g = g;
      best.h = h;
      best.best_iteration = it;
    }
    rises = now > last ? rises + 1 : 0;
    if (rises == 2) {
      eta /= 2.0;
      rises = 0;
    }
    last = now;
  }
  best.iterations = it;
  best.final_eta = eta;
  best.success = best.achieved <= opts.epsilon;
  return best;
}

}  // namespace polyprimes::grid
