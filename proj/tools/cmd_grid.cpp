#include <cmath>

#include "cli_common.hpp"
#include "polyprimes/grid/decompose.hpp"
#include "polyprimes/grid/io.hpp"
#include "polyprimes/polysys/json_io.hpp"

namespace polyprimes::cli {

namespace {

grid::Sampling sampling(const Registry& reg, bool exhaustive) {
  grid::Sampling s;
  s.budget = reg.globals.budget;
  s.seed = reg.globals.seed;
  s.require_exhaustive = exhaustive;
  return s;
}

json estimate_json(const grid::NormEstimate& e) {
  return {{"norm", num(e.norm)},           {"power", num(e.power)},          {"std_error", num(e.std_error)},
          {"exhaustive", e.exhaustive}, {"h_evaluated", e.h_evaluated}};
}

std::vector<std::vector<std::int64_t>> directions_or_ones(const std::string& text, std::size_t count, int d) {
  if (!text.empty()) return parse_vectors(text);
  return std::vector<std::vector<std::int64_t>>(count, std::vector<std::int64_t>(d, 1));
}

}  // namespace

void add_grid_commands(CLI::App& app, Registry& reg) {
  auto* norm = app.add_subcommand("norm", "Local and averaged box norms of a grid function");
  norm->require_subcommand(1);

  {
    auto* sub = norm->add_subcommand("box", "Local box norm along fixed directions");
    auto file = std::make_shared<std::string>();
    auto dirs = std::make_shared<std::string>();
    auto M = std::make_shared<std::int64_t>(4);
    sub->add_option("grid", *file, "grid file (.csv or binary)")->required();
    sub->add_option("--dirs", *dirs, "directions u_1;...;u_s, coordinates comma separated")->required();
    sub->add_option("--M", *M, "side length");
    bind(sub, reg, [=] {
      const auto f = grid::load_grid(*file);
      const grid::BoxSpec spec{parse_vectors(*dirs), *M};
      const double v = grid::box_norm(f, spec);
      Outcome out;
      out.primary = fmt(v);
      out.detail = {{"norm", num(v)}, {"s", spec.s()}, {"M", *M}, {"N", f.modulus()}, {"d", f.dimension()}};
      return out;
    });
  }

  {
    auto* sub = norm->add_subcommand("avg", "Box norm averaged over polynomial directions Q(h)");
    auto file = std::make_shared<std::string>();
    auto spec_path = std::make_shared<std::string>();
    auto exhaustive = std::make_shared<bool>(false);
    sub->add_option("grid", *file, "grid file")->required();
    sub->add_option("--spec", *spec_path, "averaged box spec JSON (family plus H and M)")->required();
    sub->add_flag("--exhaustive", *exhaustive, "fail instead of sampling when over budget");
    bind(sub, reg, [=, &reg] {
      const auto f = grid::load_grid(*file);
      const auto spec = grid::avg_spec_from_json(polysys::load_json_file(*spec_path));
      const auto e = grid::avg_box_norm(f, spec, sampling(reg, *exhaustive));
      Outcome out;
      out.primary = fmt(e.norm);
      out.detail = estimate_json(e);
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand("dual", "Dual function of a family; prints <f, D> for the first member");
    auto files = std::make_shared<std::vector<std::string>>();
    auto spec_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    sub->add_option("grids", *files, "one grid (used at every vertex) or 2^s - 1 grids in vertex order")->required();
    sub->add_option("--spec", *spec_path, "averaged box spec JSON")->required();
    sub->add_option("--out", *out_path, "where to write D (.csv or binary)");
    bind(sub, reg, [=, &reg] {
      const auto spec = grid::avg_spec_from_json(polysys::load_json_file(*spec_path));
      grid::CubeFamily fam;
      const unsigned vertices = (1U << spec.s()) - 1;
      if (files->size() == 1) {
        fam = grid::constant_family(grid::load_grid(files->front()), spec.s());
      } else if (files->size() == vertices) {
        for (unsigned w = 1; w <= vertices; ++w) fam.emplace(w, grid::load_grid((*files)[w - 1]));
      } else {
        fail(Errc::IncompleteFamily, "need 1 or " + std::to_string(vertices) + " grids, got " + std::to_string(files->size()));
      }
      const auto D = grid::dual_function(fam, spec, sampling(reg, false));
      if (!out_path->empty()) grid::save_grid(*out_path, D);
      const auto& f1 = fam.at(1);
      double pairing = 0.0;
      for (std::size_t i = 0; i < D.size(); ++i) pairing += f1[i] * D[i];
      pairing /= static_cast<double>(D.size());
      Outcome out;
      out.primary = fmt(pairing);
      out.detail = {{"pairing", num(pairing)}, {"max_abs", num(D.max_abs())}, {"mean", num(D.mean())}};
      if (!out_path->empty()) out.detail["out"] = *out_path;
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand("decompose", "Split f = g + h with 0 <= g <= 2 and h small in the averaged norm");
    auto file = std::make_shared<std::string>();
    auto spec_path = std::make_shared<std::string>();
    auto nu_path = std::make_shared<std::string>();
    auto g_path = std::make_shared<std::string>("g.bin");
    auto h_path = std::make_shared<std::string>("h.bin");
    auto opts = std::make_shared<grid::DecomposeOptions>();
    sub->add_option("grid", *file, "f as a grid file")->required();
    sub->add_option("--spec", *spec_path, "averaged box spec JSON")->required();
    sub->add_option("--nu", *nu_path, "majorant grid; checks 0 <= f <= nu first");
    sub->add_option("--eps", opts->epsilon, "target norm of h");
    sub->add_option("--eta", opts->eta, "initial step size");
    sub->add_option("--cap", opts->cap, "iteration cap");
    sub->add_option("--out-g", *g_path, "where to write g");
    sub->add_option("--out-h", *h_path, "where to write h");
    bind(sub, reg, [=, &reg] {
      const auto f = grid::load_grid(*file);
      const auto spec = grid::avg_spec_from_json(polysys::load_json_file(*spec_path));
      std::optional<GridFunction> nu;
      if (!nu_path->empty()) nu = grid::load_grid(*nu_path);
      grid::DecomposeOptions o = *opts;
      o.sampling = sampling(reg, false);
      const auto r = grid::dense_decompose(f, spec, o, nu ? &*nu : nullptr);
      grid::save_grid(*g_path, r.g);
      grid::save_grid(*h_path, r.h);
      Outcome out;
      out.primary = fmt(r.achieved);
      out.detail = {{"achieved", num(r.achieved)}, {"epsilon", num(o.epsilon)},       {"success", r.success},
                    {"iterations", r.iterations},   {"best_iteration", r.best_iteration}, {"duals_used", r.duals_used},
                    {"final_eta", num(r.final_eta)}, {"history", nums(r.history)},    {"g", *g_path},
                    {"h", *h_path}};
      out.exit_code = r.success ? 0 : 1;
      return out;
    });
  }

  {
    auto* sub = app.add_subcommand("lambda", "Counting average Lambda_{P,V}(f_0, ..., f_l)");
    auto files = std::make_shared<std::vector<std::string>>();
    auto poly = std::make_shared<std::string>();
    auto dirs = std::make_shared<std::string>();
    auto M = std::make_shared<std::int64_t>(10);
    sub->add_option("grids", *files, "one grid (used for every f_j) or l + 1 grids")->required();
    sub->add_option("--poly", *poly, "polynomials P_0;...;P_l in y, e.g. \"0;y;2*y^2\"")->required();
    sub->add_option("--dirs", *dirs, "directions v_0;...;v_l (default all ones)");
    sub->add_option("--M", *M, "y ranges over [1, M]");
    bind(sub, reg, [=] {
      const auto P = parse_poly_list(*poly);
      std::vector<GridFunction> grids;
      for (const auto& p : *files) grids.push_back(grid::load_grid(p));
      if (grids.size() != 1 && grids.size() != P.size()) {
        fail(Errc::DimensionMismatch, "need 1 or " + std::to_string(P.size()) + " grids");
      }
      std::vector<const GridFunction*> fns;
      for (std::size_t j = 0; j < P.size(); ++j) fns.push_back(&grids[grids.size() == 1 ? 0 : j]);
      const auto V = directions_or_ones(*dirs, P.size(), grids.front().dimension());
      const double v = grid::lambda_average(P, V, fns, *M);
      Outcome out;
      out.primary = fmt(v);
      out.detail = {{"lambda", num(v)}, {"M", *M}, {"N", grids.front().modulus()}};
      return out;
    });
  }
}

}  // namespace polyprimes::cli
