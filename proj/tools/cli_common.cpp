#include "cli_common.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace polyprimes::cli {

void bind(CLI::App* sub, Registry& reg, Action fn) {
  sub->callback([sub, &reg, fn = std::move(fn)] {
    reg.leaf = sub;
    reg.action = fn;
  });
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json num(double v) {
  if (!std::isfinite(v)) return fmt(v);
  return json::parse(fmt(v));
}

json nums(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(cell, &used));
      if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad integer '" + cell + "' in list '" + text + "'");
    }
  }
  if (out.empty()) fail(Errc::ParseError, "empty integer list");
  return out;
}

std::vector<std::vector<std::int64_t>> parse_vectors(const std::string& text) {
  std::vector<std::vector<std::int64_t>> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) out.push_back(parse_int_list(part));
  if (out.empty()) fail(Errc::ParseError, "empty vector list");
  return out;
}

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::GeneralPositionViolated:
    case Errc::WeightNotDecreasing:
    case Errc::NoNonlinearNode:
    case Errc::DegenerateSystem:
    case Errc::MajorantViolated:
    case Errc::EmptyIntersection:
      return 1;
    case Errc::BudgetExceeded:
    case Errc::IterationCapExceeded:
    case Errc::TargetTooLarge:
      return 3;
    default:
      return 2;
  }
}

}  // namespace polyprimes::cli
