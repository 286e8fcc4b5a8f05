#include "polyprimes/polysys/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "polyprimes/error.hpp"

namespace polyprimes::polysys {

IntPoly::IntPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) fail(Errc::ArityMismatch, "polynomial registry must contain y");
}

IntPoly IntPoly::constant(std::size_t nvars, const mpz_class& c) {
  IntPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

IntPoly IntPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) fail(Errc::ArityMismatch, "variable index outside registry");
  IntPoly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

IntPoly IntPoly::y_power(std::size_t nvars, unsigned e, const mpz_class& c) {
  IntPoly p(nvars);
  Monomial m(nvars, 0);
  m[0] = static_cast<std::uint16_t>(e);
  p.add_term(m, c);
  return p;
}

void IntPoly::add_term(const Monomial& m, const mpz_class& c) {
  if (m.size() != nvars_) fail(Errc::ArityMismatch, "monomial length does not match registry");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool IntPoly::is_constant() const noexcept {
  for (const auto& [m, c] : terms_) {
    if (std::any_of(m.begin(), m.end(), [](auto e) { return e != 0; })) return false;
  }
  return true;
}

unsigned IntPoly::deg_y() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[0]);
  return d;
}

unsigned IntPoly::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

IntPoly IntPoly::y_coefficient(unsigned k) const {
  IntPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[0] != k) continue;
    Monomial r = m;
    r[0] = 0;
    out.add_term(r, c);
  }
  return out;
}

IntPoly IntPoly::extended(std::size_t nvars) const {
  if (nvars < nvars_) fail(Errc::ArityMismatch, "cannot shrink a polynomial registry");
  IntPoly out(nvars);
  for (const auto& [m, c] : terms_) {
    Monomial r = m;
    r.resize(nvars, 0);
    out.terms_.emplace(std::move(r), c);
  }
  return out;
}

IntPoly IntPoly::substitute_y_shift(std::size_t var) const {
  if (var == 0 || var >= nvars_) fail(Errc::ArityMismatch, "shift variable outside registry");
  IntPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[0];
    mpz_class binom = 1;
    // (y + x)^e = sum_k C(e,k) y^k x^(e-k)
    for (unsigned k = 0; k <= e; ++k) {
      Monomial r = m;
      r[0] = static_cast<std::uint16_t>(k);
      r[var] = static_cast<std::uint16_t>(m[var] + (e - k));
      out.add_term(r, c * binom);
      binom = binom * (e - k) / (k + 1);
    }
  }
  return out;
}

mpz_class IntPoly::evaluate(std::span<const mpz_class> point) const {
  if (point.size() != nvars_) fail(Errc::ArityMismatch, "evaluation point has wrong arity");
  mpz_class total = 0;
  mpz_class term;
  mpz_class pw;
  for (const auto& [m, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), m[i]);
      term *= pw;
    }
    total += term;
  }
  return total;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void IntPoly::check_arity(const IntPoly& o) const {
  if (o.nvars_ != nvars_) fail(Errc::ArityMismatch, "polynomials over different registries");
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  check_arity(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  a.check_arity(b);
  IntPoly out(a.nvars_);
  Monomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      out.add_term(r, ca * cb);
    }
  }
  return out;
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names{"y"};
  for (std::size_t i = 1; i < nvars; ++i) names.push_back("h" + std::to_string(i));
  return names;
}

std::string IntPoly::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_) fail(Errc::ArityMismatch, "name list does not match registry");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest monomials first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  return os.str();
}

std::string IntPoly::to_string() const {
  auto names = default_variable_names(nvars_);
  return to_string(names);
}

}  // namespace polyprimes::polysys
