#include "polyprimes/polysys/family.hpp"

#include "polyprimes/error.hpp"

namespace polyprimes::polysys {

void PolyFamily::validate() const {
  if (dimension < 1) fail(Errc::ShapeMismatch, "family dimension must be positive");
  for (const auto& v : directions) {
    if (static_cast<int>(v.size()) != dimension) fail(Errc::ShapeMismatch, "direction length differs from dimension");
  }
  for (const auto& p : polys) {
    if (p.size() != directions.size()) fail(Errc::ShapeMismatch, "polynomial component count differs from direction count");
    if (p.nvars() != nvars()) fail(Errc::ArityMismatch, "polynomial uses a different registry");
    if (p.deg_y() != 0) fail(Errc::ShapeMismatch, "family polynomials must not depend on y");
  }
}

PolyFamily to_coordinates(const PolyFamily& q) {
  PolyFamily out;
  out.dimension = q.dimension;
  out.parameters = q.parameters;
  out.directions.assign(q.dimension, std::vector<std::int64_t>(q.dimension, 0));
  for (int i = 0; i < q.dimension; ++i) out.directions[i][i] = 1;
  for (const auto& p : q.polys) out.polys.emplace_back(coordinates(p, q.directions));
  return out;
}

PolyFamily family_from_certificate(const LinearizationCertificate& cert) {
  PolyFamily out;
  out.dimension = cert.final_system.dimension;
  out.directions = cert.final_system.directions;
  out.parameters = cert.final_system.parameters;
  out.polys = cert.directions_b();
  return out;
}

ShiftPolySystem as_system(const PolyFamily& q) {
  ShiftPolySystem s;
  s.dimension = q.dimension;
  s.directions = q.directions;
  s.parameters = q.parameters;
  for (std::size_t j = 0; j < q.polys.size(); ++j) {
    s.nodes.push_back(Node{static_cast<int>(j), q.polys[j], true, "Q" + std::to_string(j + 1), std::nullopt, 0});
  }
  return s;
}

IntPoly relabel_parameters(const IntPoly& p, std::size_t nvars, std::size_t offset) {
  if (offset + p.nvars() > nvars) fail(Errc::ArityMismatch, "relabelled parameters overflow the registry");
  IntPoly out(nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial r(nvars, 0);
    r[0] = m[0];
    for (std::size_t i = 1; i < m.size(); ++i) r[offset + i] = m[i];
    out.add_term(r, c);
  }
  return out;
}

PolyFamily concat_systems(const std::vector<PolyFamily>& parts) {
  if (parts.empty()) fail(Errc::InvalidArgument, "nothing to concatenate");
  PolyFamily out;
  out.dimension = parts.front().dimension;
  std::size_t t = 0;
  for (const auto& q : parts) {
    if (q.dimension != out.dimension) fail(Errc::DimensionMismatch, "concatenated families differ in dimension");
    t += q.parameters.size();
  }
  for (std::size_t i = 1; i <= t; ++i) out.parameters.push_back("h" + std::to_string(i));
  out.directions.assign(out.dimension, std::vector<std::int64_t>(out.dimension, 0));
  for (int i = 0; i < out.dimension; ++i) out.directions[i][i] = 1;

  std::size_t offset = 0;
  for (const auto& q : parts) {
    for (const auto& p : to_coordinates(q).polys) {
      std::vector<IntPoly> comps;
      for (const auto& c : p.components()) comps.push_back(relabel_parameters(c, t + 1, offset));
      out.polys.emplace_back(std::move(comps));
    }
    offset += q.parameters.size();
  }
  return out;
}

std::vector<std::vector<mpz_class>> evaluate_family(const PolyFamily& q, std::span<const mpz_class> h) {
  std::vector<std::vector<mpz_class>> out;
  out.reserve(q.polys.size());
  for (const auto& p : q.polys) out.push_back(evaluate(p, q.directions, 0, h));
  return out;
}

ShiftPolySystem configuration_system(const std::vector<ScalarPoly>& P, const DirectionSet& V,
                                     std::optional<int> distinguished) {
  if (P.size() != V.size() || P.empty()) fail(Errc::ShapeMismatch, "need one direction per polynomial");
  ShiftPolySystem s;
  s.dimension = static_cast<int>(V.front().size());
  s.directions = V;
  const std::size_t l = P.size();
  for (std::size_t j = 0; j < l; ++j) {
    VecPoly v(l, 1);
    for (std::size_t k = 0; k < P[j].coeffs.size(); ++k) {
      if (P[j].coeffs[k] != 0) v[j].add_term(Monomial{static_cast<std::uint16_t>(k)}, mpz_class(static_cast<long>(P[j].coeffs[k])));
    }
    s.nodes.push_back(Node{static_cast<int>(j), std::move(v), true, "f" + std::to_string(j), std::nullopt, 0});
  }
  s.distinguished = distinguished;
  s.validate();
  return s;
}

std::vector<std::int64_t> family_offsets(const PolyFamily& q, std::span<const std::int64_t> h, std::int64_t N) {
  std::vector<mpz_class> hz(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) hz[k] = mpz_class(static_cast<long>(h[k]));
  const mpz_class n(static_cast<long>(N));
  std::vector<std::int64_t> out;
  out.reserve(q.polys.size() * q.dimension);
  for (const auto& v : evaluate_family(q, hz)) {
    for (const auto& c : v) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
      out.push_back(r.get_si());
    }
  }
  return out;
}

std::vector<std::int64_t> parameter_point(std::uint64_t k, std::size_t t, std::int64_t H) {
  std::vector<std::int64_t> h(t);
  for (std::size_t i = t; i-- > 0;) {
    h[i] = static_cast<std::int64_t>(k % static_cast<std::uint64_t>(H)) + 1;
    k /= static_cast<std::uint64_t>(H);
  }
  return h;
}

}  // namespace polyprimes::polysys
