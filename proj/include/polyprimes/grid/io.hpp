#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "json.hpp"
#include "polyprimes/grid/norms.hpp"

namespace polyprimes::grid {

// One row per lattice point: x_1..x_d (in [0, N)) then the value, header
// "x1,...,xd,value". Reading accepts the rows in any order and requires
// every point exactly once.
void write_grid_csv(std::ostream& os, const GridFunction& f);
GridFunction read_grid_csv(std::istream& is, const std::string& name = "<csv>");

// Header: magic "PPGRID01", i32 d, i64 N; payload: N^d doubles, row-major.
void write_grid_binary(std::ostream& os, const GridFunction& f);
GridFunction read_grid_binary(std::istream& is, const std::string& name = "<binary>");

// Dispatches on the extension: ".csv" or anything else as binary.
void save_grid(const std::string& path, const GridFunction& f);
GridFunction load_grid(const std::string& path);

// The family encoding plus "H" and "M".
nlohmann::json avg_spec_to_json(const AvgBoxSpec& spec);
AvgBoxSpec avg_spec_from_json(const nlohmann::json& j);

}  // namespace polyprimes::grid
