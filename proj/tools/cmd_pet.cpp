#include <fstream>
#include <iostream>

#include "cli_common.hpp"
#include "polyprimes/polysys/json_io.hpp"

namespace polyprimes::cli {

namespace {

json witness_json(const polysys::GpWitness& w) {
  return {{"alpha", w.alpha}, {"beta", w.beta}, {"coordinate", w.coordinate + 1}, {"reason", w.reason}};
}

}  // namespace

void add_pet_commands(CLI::App& app, Registry& reg) {
  auto* pet = app.add_subcommand("pet", "PET induction on polynomial systems");
  pet->require_subcommand(1);

  {
    auto* sub = pet->add_subcommand("check-gp", "General position (and w.r.t. the distinguished node)");
    auto file = std::make_shared<std::string>();
    auto wrt = std::make_shared<int>(-1);
    sub->add_option("system", *file, "system JSON")->required();
    sub->add_option("--wrt", *wrt, "node to check general position against (default: the distinguished node)");
    bind(sub, reg, [file, wrt] {
      const auto s = polysys::system_from_json(polysys::load_json_file(*file));
      Outcome out;
      auto gp = polysys::is_general_position(s);
      out.detail["general_position"] = gp.ok;
      if (gp.witness) out.detail["witness"] = witness_json(*gp.witness);
      const int node = *wrt >= 0 ? *wrt : s.distinguished.value_or(-1);
      bool ok = gp.ok;
      if (gp.ok && node >= 0) {
        auto w = polysys::is_general_position_wrt(s, node);
        out.detail["wrt_node"] = node;
        out.detail["general_position_wrt"] = w.ok;
        if (w.witness) out.detail["witness"] = witness_json(*w.witness);
        ok = w.ok;
      }
      out.primary = ok ? "true" : "false";
      out.exit_code = ok ? 0 : 1;
      return out;
    });
  }

  {
    auto* sub = pet->add_subcommand("weights", "Weight matrix relative to a node");
    auto file = std::make_shared<std::string>();
    auto node = std::make_shared<int>(0);
    auto all = std::make_shared<bool>(false);
    sub->add_option("system", *file, "system JSON")->required();
    sub->add_option("--node", *node, "node alpha* the system is shifted by")->required();
    sub->add_flag("--all-nodes", *all, "count inactive nodes too");
    bind(sub, reg, [file, node, all] {
      const auto s = polysys::system_from_json(polysys::load_json_file(*file));
      const auto w = polysys::weight_matrix(s, *node, !*all);
      Outcome out;
      out.primary = w.to_string();
      out.detail = {{"node", *node}, {"active_only", !*all}, {"weight", polysys::weight_to_json(w)}};
      return out;
    });
  }

  {
    auto* sub = pet->add_subcommand("linearize", "Run PET until the system is linear; writes a certificate");
    auto file = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto rule = std::make_shared<std::string>("descent");
    auto trace = std::make_shared<bool>(false);
    auto no_check = std::make_shared<bool>(false);
    auto step_cap = std::make_shared<std::size_t>(10000);
    auto node_cap = std::make_shared<std::size_t>(std::size_t{1} << 14);
    sub->add_option("system", *file, "system JSON with a distinguished node")->required();
    sub->add_option("--out", *out_path, "certificate path (default: certificate on stdout)");
    sub->add_option("--rule", *rule, "node selection: descent, min-weight, largest-first-nonzero");
    sub->add_flag("--trace", *trace, "print every step to stderr");
    sub->add_flag("--no-check", *no_check, "skip the per-step general position re-check");
    sub->add_option("--step-cap", *step_cap, "maximum number of steps");
    sub->add_option("--node-cap", *node_cap, "maximum number of nodes before a step");
    bind(sub, reg, [=] {
      const auto s = polysys::system_from_json(polysys::load_json_file(*file));
      polysys::PetOptions opts;
      opts.rule = polysys::parse_selection_rule(*rule);
      opts.check_invariants = !*no_check;
      opts.step_cap = *step_cap;
      opts.node_cap = *node_cap;
      const auto cert = polysys::pet_linearize(s, opts);
      if (*trace) {
        for (std::size_t k = 0; k < cert.steps.size(); ++k) {
          const auto& st = cert.steps[k];
          std::cerr << "step " << k + 1 << ": node " << st.chosen << " W=" << st.weight_before.to_string()
                    << " -> node " << st.after_node << " W=" << st.weight_after.to_string() << ", "
                    << st.nodes_after << " nodes\n";
        }
      }
      Outcome out;
      out.primary = std::to_string(cert.step_count());
      const auto cj = polysys::certificate_to_json(cert);
      if (out_path->empty()) {
        out.detail = cj;
      } else {
        std::ofstream os(*out_path);
        if (!os) fail(Errc::InvalidArgument, "cannot write " + *out_path);
        os << cj.dump(2) << '\n';
        json chain = json::array();
        for (const auto& st : cert.steps) chain.push_back(st.weight_before.to_string() + " > " + st.weight_after.to_string());
        out.detail = {{"certificate", *out_path}, {"steps", cert.step_count()}, {"weight_chain", chain},
                      {"linear_nodes", cert.linear.size()}};
      }
      return out;
    });
  }
}

}  // namespace polyprimes::cli
