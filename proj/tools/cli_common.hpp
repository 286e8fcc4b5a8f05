#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyprimes/error.hpp"

namespace polyprimes::cli {

using nlohmann::json;

// What a command hands back: one primary line, then JSON detail.
struct Outcome {
  std::string primary;
  json detail = json::object();
  int exit_code = 0;
};

struct Globals {
  std::uint64_t seed = 1;
  int threads = 0;
  double budget = 1e9;
  std::string config;
};

// Registered by each command group; the selected leaf stores its action.
using Action = std::function<Outcome()>;

struct Registry {
  Globals globals;
  Action action;
  CLI::App* leaf = nullptr;
};

void add_pet_commands(CLI::App& app, Registry& reg);
void add_nu_commands(CLI::App& app, Registry& reg);
void add_grid_commands(CLI::App& app, Registry& reg);
void add_search_commands(CLI::App& app, Registry& reg);

// Marks `sub` as a runnable leaf whose action is `fn`.
void bind(CLI::App* sub, Registry& reg, Action fn);

// 12 significant digits, as text and as a JSON number.
std::string fmt(double v);
json num(double v);
json nums(const std::vector<double>& v);

std::vector<std::int64_t> parse_int_list(const std::string& text);
// "1,1;1,2" -> {{1,1},{1,2}}
std::vector<std::vector<std::int64_t>> parse_vectors(const std::string& text);

int exit_code_for(Errc code) noexcept;

}  // namespace polyprimes::cli
