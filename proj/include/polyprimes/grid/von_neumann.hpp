#pragma once

#include <vector>

#include "polyprimes/grid/norms.hpp"
#include "polyprimes/polysys/pet.hpp"

namespace polyprimes::grid {

struct ProbeTerm {
  int k = 0;              // function index, the certificate's distinguished node
  std::size_t steps = 0;  // S_k
  double norm = 0.0;      // ||f_k|| in the averaged box norm of the certificate's b's
  double powered = 0.0;   // norm^(2^-S_k)
  bool exhaustive = true;
};

struct ProbeResult {
  double lambda = 0.0;  // |Lambda_{P,V}(f_0..f_l)|
  double min_norm = 0.0;
  std::vector<ProbeTerm> terms;
};

// Compares |Lambda| with min_k ||f_k||^(2^-S_k); reports only, the
// inequality holds up to lower-order terms. Throws CertificateMismatch when a
// certificate was not produced from the configuration system of (P, V).
ProbeResult von_neumann_probe(const std::vector<ScalarPoly>& P, const std::vector<std::vector<std::int64_t>>& V,
                              const std::vector<const GridFunction*>& fns,
                              const std::vector<polysys::LinearizationCertificate>& certificates, std::int64_t H,
                              std::int64_t M, const Sampling& sampling = {});

}  // namespace polyprimes::grid
