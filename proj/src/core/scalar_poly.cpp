#include "polyprimes/scalar_poly.hpp"

#include <cctype>
#include <limits>

#include "polyprimes/error.hpp"

namespace polyprimes {

ScalarPoly::ScalarPoly(std::vector<std::int64_t> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

mpz_class ScalarPoly::eval(const mpz_class& y) const {
  mpz_class v = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * y + mpz_class(static_cast<long>(coeffs[k]));
  return v;
}

std::optional<std::int64_t> ScalarPoly::eval_exact(std::int64_t y) const {
  __int128 v = 0;
  constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    // |v| <= 2^63 and |y| < 2^63 keep the product inside 128 bits.
    v = v * y + coeffs[k];
    if (v > lim || v < -lim) return std::nullopt;
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t ScalarPoly::eval_mod(std::int64_t y, std::int64_t n) const {
  const __int128 ym = ((static_cast<__int128>(y) % n) + n) % n;
  __int128 v = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    v = (v * ym + (static_cast<__int128>(coeffs[k]) % n + n)) % n;
  }
  return static_cast<std::int64_t>(v);
}

std::string ScalarPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const std::int64_t c = coeffs[k];
    if (c == 0) continue;
    const std::uint64_t a = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || a != 1) out += std::to_string(a);
    if (k > 0 && a != 1) out += "*";
    if (k >= 1) out += "y";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ScalarPoly parse() {
    std::vector<std::int64_t> c;
    skip();
    if (pos_ == s_.size()) error("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        error("expected + or -");
      }
      first = false;
      auto [coef, deg] = term();
      if (c.size() <= deg) c.resize(deg + 1, 0);
      c[deg] += sign * coef;
      skip();
    }
    return ScalarPoly(std::move(c));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::ParseError, "polynomial '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::int64_t number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected a number");
    try {
      return std::stoll(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      error("number out of range");
    }
  }

  // [number ['*']] ['y' ['^' number]]
  std::pair<std::int64_t, std::size_t> term() {
    std::int64_t coef = 1;
    bool have_num = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_num = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'y') error("expected y after *");
      }
    }
    if (peek() != 'y') {
      if (!have_num) error("expected a number or y");
      return {coef, 0};
    }
    ++pos_;
    skip();
    std::size_t deg = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      const auto e = number();
      if (e > 64) error("exponent above 64");
      deg = static_cast<std::size_t>(e);
    }
    return {coef, deg};
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarPoly parse_scalar_poly(const std::string& text) { return Parser(text).parse(); }

std::vector<ScalarPoly> parse_poly_list(const std::string& text) {
  std::vector<ScalarPoly> out;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(';', start);
    out.push_back(parse_scalar_poly(text.substr(start, end == std::string::npos ? std::string::npos : end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace polyprimes
