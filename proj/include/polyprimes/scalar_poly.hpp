#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyprimes {

// Integer polynomial in one variable y; coeffs[k] multiplies y^k, no
// trailing zeros.
struct ScalarPoly {
  std::vector<std::int64_t> coeffs;

  ScalarPoly() = default;
  explicit ScalarPoly(std::vector<std::int64_t> c);

  bool is_zero() const noexcept { return coeffs.empty(); }
  unsigned degree() const noexcept { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
  std::int64_t constant() const noexcept { return coeffs.empty() ? 0 : coeffs[0]; }

  mpz_class eval(const mpz_class& y) const;
  // Exact value, nullopt when it leaves the int64 range.
  std::optional<std::int64_t> eval_exact(std::int64_t y) const;
  // Value mod n in [0, n).
  std::int64_t eval_mod(std::int64_t y, std::int64_t n) const;

  std::string to_string() const;
  friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;
};

// Parses "2*y^2 - y + 3"; throws ParseError.
ScalarPoly parse_scalar_poly(const std::string& text);
// Semicolon-separated list, e.g. "0;y;2*y^2".
std::vector<ScalarPoly> parse_poly_list(const std::string& text);

}  // namespace polyprimes
