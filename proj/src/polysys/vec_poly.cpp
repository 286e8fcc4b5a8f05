#include "polyprimes/polysys/vec_poly.hpp"

#include <algorithm>

#include "polyprimes/error.hpp"

namespace polyprimes::polysys {

VecPoly::VecPoly(std::size_t ncomponents, std::size_t nvars)
    : nvars_(nvars), comps_(ncomponents, IntPoly(nvars)) {}

VecPoly::VecPoly(std::vector<IntPoly> components) : comps_(std::move(components)) {
  if (comps_.empty()) fail(Errc::ShapeMismatch, "vector polynomial needs at least one component");
  nvars_ = comps_.front().nvars();
  for (const auto& c : comps_) {
    if (c.nvars() != nvars_) fail(Errc::ArityMismatch, "components use different registries");
  }
}

bool VecPoly::is_zero() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(), [](const IntPoly& p) { return p.is_zero(); });
}

unsigned VecPoly::deg_y() const noexcept {
  unsigned d = 0;
  for (const auto& c : comps_) d = std::max(d, c.deg_y());
  return d;
}

VecPoly VecPoly::y_coefficient(unsigned k) const {
  VecPoly out = *this;
  for (auto& c : out.comps_) c = c.y_coefficient(k);
  return out;
}

VecPoly VecPoly::extended(std::size_t nvars) const {
  VecPoly out = *this;
  out.nvars_ = nvars;
  for (auto& c : out.comps_) c = c.extended(nvars);
  return out;
}

VecPoly VecPoly::substitute_y_shift(std::size_t var) const {
  VecPoly out = *this;
  for (auto& c : out.comps_) c = c.substitute_y_shift(var);
  return out;
}

VecPoly VecPoly::operator-() const {
  VecPoly out = *this;
  for (auto& c : out.comps_) c = -c;
  return out;
}

void VecPoly::check_shape(const VecPoly& o) const {
  if (o.comps_.size() != comps_.size()) fail(Errc::ShapeMismatch, "vector polynomials differ in length");
  if (o.nvars_ != nvars_) fail(Errc::ArityMismatch, "vector polynomials use different registries");
}

VecPoly& VecPoly::operator+=(const VecPoly& o) {
  check_shape(o);
  for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] += o.comps_[j];
  return *this;
}

VecPoly& VecPoly::operator-=(const VecPoly& o) {
  check_shape(o);
  for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] -= o.comps_[j];
  return *this;
}

std::pair<VecPoly, unsigned> leading_y_term(const VecPoly& p) {
  if (p.is_zero()) fail(Errc::ZeroPolynomial, "leading term of the zero polynomial");
  const unsigned d = p.deg_y();
  return {p.y_coefficient(d), d};
}

IntPoly project(const VecPoly& p, const DirectionSet& directions, std::size_t i) {
  if (directions.size() != p.size()) fail(Errc::ShapeMismatch, "direction count differs from component count");
  IntPoly out(p.nvars());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (i >= directions[j].size()) fail(Errc::ShapeMismatch, "coordinate index outside dimension");
    const std::int64_t v = directions[j][i];
    if (v == 0) continue;
    out += p[j] * mpz_class(static_cast<long>(v));
  }
  return out;
}

std::vector<IntPoly> coordinates(const VecPoly& p, const DirectionSet& directions) {
  if (directions.empty()) fail(Errc::ShapeMismatch, "no directions");
  std::vector<IntPoly> out;
  const std::size_t d = directions.front().size();
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.push_back(project(p, directions, i));
  return out;
}

std::vector<mpz_class> evaluate(const VecPoly& p, const DirectionSet& directions,
                                const mpz_class& y, std::span<const mpz_class> h) {
  if (h.size() + 1 != p.nvars()) {
    fail(Errc::ArityMismatch, "expected " + std::to_string(p.nvars() - 1) + " parameters, got " +
                                  std::to_string(h.size()));
  }
  if (directions.size() != p.size()) fail(Errc::ShapeMismatch, "direction count differs from component count");
  std::vector<mpz_class> point;
  point.reserve(h.size() + 1);
  point.push_back(y);
  point.insert(point.end(), h.begin(), h.end());
  const std::size_t d = directions.empty() ? 0 : directions.front().size();
  std::vector<mpz_class> out(d, 0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    const mpz_class r = p[j].evaluate(point);
    if (r == 0) continue;
    for (std::size_t i = 0; i < d; ++i) out[i] += r * mpz_class(static_cast<long>(directions[j][i]));
  }
  return out;
}

}  // namespace polyprimes::polysys
