#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyprimes/polysys/pet.hpp"
#include "polyprimes/scalar_poly.hpp"

namespace polyprimes::polysys {

/// A list Q_1..Q_s of vector polynomials in the parameters h only (the y slot
/// of the registry stays unused), written over a shared direction basis.
struct PolyFamily {
  int dimension = 0;
  DirectionSet directions;
  std::vector<std::string> parameters;
  std::vector<VecPoly> polys;

  std::size_t nvars() const noexcept { return parameters.size() + 1; }
  void validate() const;
};

/// Same family written in the standard basis e_1..e_d.
PolyFamily to_coordinates(const PolyFamily& q);

/// The box-norm directions b_alpha(h) of a certificate.
PolyFamily family_from_certificate(const LinearizationCertificate& cert);

/// Nodes 0..s-1 carrying Q_1..Q_s, for the general-position checks.
ShiftPolySystem as_system(const PolyFamily& q);

/// Q^1 + ... + Q^m over disjoint parameter blocks, renamed h1..ht in order.
/// Result is in coordinate form.
PolyFamily concat_systems(const std::vector<PolyFamily>& parts);

/// Substitutes a new registry: variable i > 0 of p becomes variable offset + i.
IntPoly relabel_parameters(const IntPoly& p, std::size_t nvars, std::size_t offset);

/// Coordinates of every Q_j(h) in Z^d (y = 0).
std::vector<std::vector<mpz_class>> evaluate_family(const PolyFamily& q, std::span<const mpz_class> h);

/// Nodes j = 0..l carrying P_j(y) v_j in slot j, labelled f0..fl.
ShiftPolySystem configuration_system(const std::vector<ScalarPoly>& P, const DirectionSet& V,
                                     std::optional<int> distinguished = std::nullopt);

/// Q_j(h) mod N in [0, N), flattened as offsets[j * d + i].
std::vector<std::int64_t> family_offsets(const PolyFamily& q, std::span<const std::int64_t> h, std::int64_t N);

/// h in [1, H]^t at flat index k, h_1 slowest.
std::vector<std::int64_t> parameter_point(std::uint64_t k, std::size_t t, std::int64_t H);

}  // namespace polyprimes::polysys
