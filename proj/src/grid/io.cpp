#include "polyprimes/grid/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "polyprimes/error.hpp"
#include "polyprimes/polysys/json_io.hpp"

namespace polyprimes::grid {

namespace {

constexpr char kMagic[8] = {'P', 'P', 'G', 'R', 'I', 'D', '0', '1'};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

void write_grid_csv(std::ostream& os, const GridFunction& f) {
  for (int i = 1; i <= f.dimension(); ++i) os << 'x' << i << ',';
  os << "value\n";
  char buf[64];
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    for (auto c : f.point_of(idx)) os << c << ',';
    std::snprintf(buf, sizeof buf, "%.17g\n", f[idx]);
    os << buf;
  }
}

GridFunction read_grid_csv(std::istream& is, const std::string& name) {
  std::string line;
  if (!std::getline(is, line)) fail(Errc::ParseError, name + ": empty grid file");
  int d = 0;
  for (char c : line) d += c == ',';
  if (d < 1 || line.rfind("x1", 0) != 0) fail(Errc::ParseError, name + ": header must be x1,...,xd,value");
  std::vector<std::vector<std::int64_t>> pts;
  std::vector<double> vals;
  std::int64_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::int64_t> p;
    for (int i = 0; i < d; ++i) {
      if (!std::getline(ss, cell, ',')) fail(Errc::ParseError, name + ":" + std::to_string(lineno) + ": short row");
      try {
        p.push_back(std::stoll(cell));
      } catch (const std::exception&) {
        fail(Errc::ParseError, name + ":" + std::to_string(lineno) + ": bad coordinate '" + cell + "'");
      }
    }
    if (!std::getline(ss, cell)) fail(Errc::ParseError, name + ":" + std::to_string(lineno) + ": missing value");
    try {
      vals.push_back(std::stod(cell));
    } catch (const std::exception&) {
      fail(Errc::ParseError, name + ":" + std::to_string(lineno) + ": bad value '" + cell + "'");
    }
    pts.push_back(std::move(p));
  }
  // N^d rows; recover N from the row count.
  std::int64_t N = 1;
  while (static_cast<double>(grid_size(d, N + 1)) <= static_cast<double>(pts.size())) ++N;
  if (grid_size(d, N) != pts.size() || N < 1) {
    fail(Errc::ParseError, name + ": " + std::to_string(pts.size()) + " rows is not N^" + std::to_string(d));
  }
  GridFunction f(d, N, 0.0);
  std::vector<bool> seen(f.size(), false);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (auto c : pts[k]) {
      if (c < 0 || c >= N) fail(Errc::ParseError, name + ": coordinate " + std::to_string(c) + " outside [0, N)");
    }
    const auto idx = f.index_of(pts[k]);
    if (seen[idx]) fail(Errc::ParseError, name + ": repeated point");
    seen[idx] = true;
    f[idx] = vals[k];
  }
  return f;
}

void write_grid_binary(std::ostream& os, const GridFunction& f) {
  os.write(kMagic, sizeof kMagic);
  const std::int32_t d = f.dimension();
  const std::int64_t N = f.modulus();
  os.write(reinterpret_cast<const char*>(&d), sizeof d);
  os.write(reinterpret_cast<const char*>(&N), sizeof N);
  os.write(reinterpret_cast<const char*>(f.values().data()), static_cast<std::streamsize>(f.size() * sizeof(double)));
}

GridFunction read_grid_binary(std::istream& is, const std::string& name) {
  char magic[8];
  std::int32_t d = 0;
  std::int64_t N = 0;
  is.read(magic, sizeof magic);
  is.read(reinterpret_cast<char*>(&d), sizeof d);
  is.read(reinterpret_cast<char*>(&N), sizeof N);
  if (!is || std::memcmp(magic, kMagic, sizeof kMagic) != 0) fail(Errc::ParseError, name + ": not a grid file");
  if (d < 1 || N < 1) fail(Errc::ParseError, name + ": bad header");
  std::vector<double> v(grid_size(d, N));
  is.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
  if (!is) fail(Errc::ParseError, name + ": truncated payload");
  return GridFunction(d, N, std::move(v));
}

void save_grid(const std::string& path, const GridFunction& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(Errc::InvalidArgument, "cannot write " + path);
  if (ends_with(path, ".csv")) {
    write_grid_csv(os, f);
  } else {
    write_grid_binary(os, f);
  }
}

GridFunction load_grid(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(Errc::ParseError, path + ": cannot open");
  return ends_with(path, ".csv") ? read_grid_csv(is, path) : read_grid_binary(is, path);
}

nlohmann::json avg_spec_to_json(const AvgBoxSpec& spec) {
  auto j = polysys::family_to_json(spec.q);
  j["H"] = spec.H;
  j["M"] = spec.M;
  return j;
}

AvgBoxSpec avg_spec_from_json(const nlohmann::json& j) {
  AvgBoxSpec spec;
  spec.q = polysys::family_from_json(j);
  try {
    spec.H = j.at("H").get<std::int64_t>();
    spec.M = j.at("M").get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("box spec: ") + e.what());
  }
  return spec;
}

}  // namespace polyprimes::grid
