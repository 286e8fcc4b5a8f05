#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace polyprimes::polysys {

/// Exponent vector over (y, h1, ..., ht); slot 0 is always y.
using Monomial = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. No stored coefficient is ever zero, so structural
/// equality is polynomial equality.
class IntPoly {
 public:
  explicit IntPoly(std::size_t nvars = 1);

  static IntPoly constant(std::size_t nvars, const mpz_class& c);
  static IntPoly variable(std::size_t nvars, std::size_t index);
  /// c * y^e
  static IntPoly y_power(std::size_t nvars, unsigned e, const mpz_class& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Monomial, mpz_class>& terms() const noexcept { return terms_; }

  void add_term(const Monomial& m, const mpz_class& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// True for the zero polynomial as well.
  bool is_constant() const noexcept;
  /// Zero polynomial reports 0; use is_zero to tell it apart.
  unsigned deg_y() const noexcept;
  unsigned total_degree() const noexcept;

  /// Coefficient of y^k as a polynomial in h (same registry, y exponent 0).
  IntPoly y_coefficient(unsigned k) const;

  /// Same polynomial over a longer registry (new variables appended).
  IntPoly extended(std::size_t nvars) const;

  /// y -> y + x_var, expanded binomially.
  IntPoly substitute_y_shift(std::size_t var) const;

  mpz_class evaluate(std::span<const mpz_class> point) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& c);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  // Total order so polynomials can key ordered containers.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  std::string to_string(std::span<const std::string> names) const;
  /// Names y, h1, h2, ...
  std::string to_string() const;

 private:
  void check_arity(const IntPoly& o) const;

  std::size_t nvars_;
  std::map<Monomial, mpz_class> terms_;
};

std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace polyprimes::polysys
