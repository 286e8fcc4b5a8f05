#include "polyprimes/grid/von_neumann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyprimes/error.hpp"

namespace polyprimes::grid {

ProbeResult von_neumann_probe(const std::vector<ScalarPoly>& P, const std::vector<std::vector<std::int64_t>>& V,
                              const std::vector<const GridFunction*>& fns,
                              const std::vector<polysys::LinearizationCertificate>& certificates, std::int64_t H,
                              std::int64_t M, const Sampling& sampling) {
  if (certificates.empty()) fail(Errc::CertificateMismatch, "no certificate given");
  ProbeResult out;
  out.lambda = std::abs(lambda_average(P, V, fns, M, sampling.exec));
  const auto config = polysys::configuration_system(P, V);
  out.min_norm = std::numeric_limits<double>::infinity();
  for (const auto& cert : certificates) {
    const auto& init = cert.initial;
    bool same = init.dimension == config.dimension && init.directions == config.directions &&
                init.nodes.size() == config.nodes.size() && init.parameters.empty();
    for (std::size_t j = 0; same && j < config.nodes.size(); ++j) {
      same = init.nodes[j].id == config.nodes[j].id && init.nodes[j].poly == config.nodes[j].poly;
    }
    if (!same) fail(Errc::CertificateMismatch, "certificate was not produced from the configuration (P, V)");
    ProbeTerm t;
    t.k = cert.distinguished();
    if (t.k < 0 || static_cast<std::size_t>(t.k) >= fns.size()) {
      fail(Errc::CertificateMismatch, "certificate distinguishes node " + std::to_string(t.k));
    }
    t.steps = cert.step_count();
    AvgBoxSpec spec{polysys::family_from_certificate(cert), H, M};
    if (spec.q.polys.empty()) {
      // Nothing left to control f_k: every other function was discarded.
      t.norm = 1.0;
    } else {
      const auto est = avg_box_norm(*fns[t.k], spec, sampling);
      t.norm = est.norm;
      t.exhaustive = est.exhaustive;
    }
    t.powered = std::pow(t.norm, std::ldexp(1.0, -static_cast<int>(t.steps)));
    out.min_norm = std::min(out.min_norm, t.powered);
    out.terms.push_back(t);
  }
  return out;
}

}  // namespace polyprimes::grid
