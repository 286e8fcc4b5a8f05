#include <omp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "cli_common.hpp"
#include "polyprimes/polysys/json_io.hpp"

using namespace polyprimes;
using namespace polyprimes::cli;

namespace {

// Fills options of the selected command that were not given on the command
// line from a JSON object: flat keys, or keys nested under the command path
// (e.g. {"nu": {"build": {"N": 100000}}}).
void apply_config(const std::string& path, CLI::App* leaf) {
  const json cfg = polysys::load_json_file(path);
  std::vector<std::string> chain;
  for (auto* a = leaf; a != nullptr && a->get_parent() != nullptr; a = a->get_parent()) chain.insert(chain.begin(), a->get_name());
  const json* node = &cfg;
  std::vector<const json*> scopes{&cfg};
  for (const auto& name : chain) {
    if (!node->is_object() || !node->contains(name)) break;
    node = &node->at(name);
    scopes.push_back(node);
  }
  // The most specific scope wins.
  for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
    for (const auto& [key, value] : (*it)->items()) {
      if (value.is_object()) continue;
      CLI::Option* opt = leaf->get_option_no_throw("--" + key);
      if (opt == nullptr) opt = leaf->get_option_no_throw(key);
      if (opt == nullptr || opt->count() > 0) continue;
      std::vector<std::string> inputs;
      auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
      if (value.is_array()) {
        for (const auto& v : value) inputs.push_back(text(v));
      } else {
        inputs.push_back(text(value));
      }
      for (const auto& in : inputs) opt->add_result(in);
      opt->run_callback();
    }
  }
}

std::string command_path(CLI::App* leaf) {
  std::string s;
  for (auto* a = leaf; a != nullptr && a->get_parent() != nullptr; a = a->get_parent()) s = a->get_name() + (s.empty() ? "" : " " + s);
  return s;
}

json echo_options(CLI::App* leaf) {
  json j = json::object();
  for (const auto* opt : leaf->get_options()) {
    if (opt->get_name() == "--help" || opt->get_name().empty()) continue;
    const auto res = opt->results();
    if (res.empty()) continue;
    j[opt->get_name()] = res.size() == 1 ? json(res.front()) : json(res);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyprimes: polynomial configurations in the prime lattice"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "polyprimes 0.3.0");
  Registry reg;
  app.add_option("--seed", reg.globals.seed, "seed for every sampled average");
  app.add_option("--threads", reg.globals.threads, "OpenMP worker cap (0: runtime default)");
  app.add_option("--budget", reg.globals.budget, "term evaluations before averages switch to sampling");
  app.add_option("--config", reg.globals.config, "JSON file mirroring the flags");
  add_pet_commands(app, reg);
  add_nu_commands(app, reg);
  add_grid_commands(app, reg);
  add_search_commands(app, reg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::system_clock::now();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (!reg.action) fail(Errc::InvalidArgument, "no command selected");
    if (!reg.globals.config.empty()) apply_config(reg.globals.config, reg.leaf);
    if (reg.globals.threads > 0) omp_set_num_threads(reg.globals.threads);

    json prov = {{"tool", "polyprimes"}, {"version", "0.3.0"}, {"command", command_path(reg.leaf)},
                 {"seed", reg.globals.seed}, {"budget", num(reg.globals.budget)}, {"options", echo_options(reg.leaf)}};
    std::cerr << "# provenance " << prov.dump() << '\n';

    const Outcome out = reg.action();
    std::cout << out.primary << '\n' << out.detail.dump(2) << '\n';

    const std::time_t tt = std::chrono::system_clock::to_time_t(started);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "# timing started=" << stamp << " elapsed_s=" << fmt(secs) << '\n';
    return out.exit_code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << '\n';
    if (code == 3) std::cerr << "hint: raise --budget, --step-cap or --node-cap, or shrink the instance\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
