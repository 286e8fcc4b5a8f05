#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polyprimes/polysys/int_poly.hpp"

namespace polyprimes::polysys {

using DirectionSet = std::vector<std::vector<std::int64_t>>;

/// sum_j R_j(y, h) v_j, stored as the l component polynomials R_j.
class VecPoly {
 public:
  VecPoly() = default;
  VecPoly(std::size_t ncomponents, std::size_t nvars);
  explicit VecPoly(std::vector<IntPoly> components);

  std::size_t size() const noexcept { return comps_.size(); }
  std::size_t nvars() const noexcept { return nvars_; }
  const IntPoly& operator[](std::size_t j) const { return comps_[j]; }
  IntPoly& operator[](std::size_t j) { return comps_[j]; }
  const std::vector<IntPoly>& components() const noexcept { return comps_; }

  bool is_zero() const noexcept;
  /// Max over components; 0 for the zero vector.
  unsigned deg_y() const noexcept;

  VecPoly y_coefficient(unsigned k) const;
  VecPoly extended(std::size_t nvars) const;
  VecPoly substitute_y_shift(std::size_t var) const;

  VecPoly operator-() const;
  VecPoly& operator+=(const VecPoly& o);
  VecPoly& operator-=(const VecPoly& o);
  friend VecPoly operator+(VecPoly a, const VecPoly& b) { return a += b; }
  friend VecPoly operator-(VecPoly a, const VecPoly& b) { return a -= b; }
  friend bool operator==(const VecPoly& a, const VecPoly& b) = default;

 private:
  void check_shape(const VecPoly& o) const;

  std::size_t nvars_ = 1;
  std::vector<IntPoly> comps_;
};

/// Leading coefficient in y and its degree: p = c(h) y^deg + lower terms.
/// Throws ZeroPolynomial for p == 0.
std::pair<VecPoly, unsigned> leading_y_term(const VecPoly& p);

/// pi_i(p) = sum_j R_j * pi_i(v_j), i zero-based.
IntPoly project(const VecPoly& p, const DirectionSet& directions, std::size_t i);

/// Coordinate expansion of p as d integer polynomials.
std::vector<IntPoly> coordinates(const VecPoly& p, const DirectionSet& directions);

/// Exact value of sum_j R_j(y, h) v_j in Z^d.
std::vector<mpz_class> evaluate(const VecPoly& p, const DirectionSet& directions,
                                const mpz_class& y, std::span<const mpz_class> h);

}  // namespace polyprimes::polysys
