#include <fstream>
#include <iostream>

#include "cli_common.hpp"
#include "polyprimes/polysys/json_io.hpp"
#include "polyprimes/search/io.hpp"

namespace polyprimes::cli {

void add_search_commands(CLI::App& app, Registry& reg) {
  auto* sub = app.add_subcommand("find", "Configurations {x + P_j(y) v_j} inside a prime lattice");
  struct Flags {
    std::string query;
    std::int64_t N = 100;
    std::string poly;
    int dims = 1;
    std::string dirs;
    std::int64_t ymax = 10;
    std::size_t limit = 0;
    std::string target = "primes";
    std::int64_t modulus = 1, residue = 0;
    bool cyclic = false, profile = false;
    std::string out;
  };
  auto f = std::make_shared<Flags>();
  sub->add_option("--query", f->query, "query JSON (replaces the flags below)");
  sub->add_option("--N", f->N, "search window [1, N]^d");
  sub->add_option("--poly", f->poly, "polynomials P_0;...;P_l in y with P_j(0) = 0");
  sub->add_option("--dims", f->dims, "dimension d");
  sub->add_option("--dirs", f->dirs, "directions v_0;...;v_l (default all ones)");
  sub->add_option("--ymax", f->ymax, "y ranges over [1, ymax]");
  sub->add_option("--limit", f->limit, "stop after this many hits (0: all)");
  sub->add_option("--target", f->target, "primes or residue (primes = residue mod modulus)");
  sub->add_option("--modulus", f->modulus, "modulus for --target residue");
  sub->add_option("--residue", f->residue, "residue for --target residue");
  sub->add_flag("--cyclic", f->cyclic, "wrap points mod N");
  sub->add_flag("--profile", f->profile, "also report the smallest y per base point");
  sub->add_option("--out", f->out, "hits CSV path");
  bind(sub, reg, [f] {
    search::ConfigurationQuery q;
    if (!f->query.empty()) {
      q = search::query_from_json(polysys::load_json_file(f->query));
    } else {
      if (f->poly.empty()) fail(Errc::InvalidArgument, "--poly or --query is required");
      q.dimension = f->dims;
      q.P = parse_poly_list(f->poly);
      q.V = f->dirs.empty() ? std::vector<std::vector<std::int64_t>>(q.P.size(), std::vector<std::int64_t>(f->dims, 1))
                            : parse_vectors(f->dirs);
      q.N = f->N;
      q.y_max = f->ymax;
      q.cyclic = f->cyclic;
      if (f->target == "primes") {
        q.target = search::prime_lattice(q.dimension, q.N);
      } else if (f->target == "residue") {
        q.target = search::residue_prime_lattice(q.dimension, q.N, f->modulus, f->residue);
      } else {
        fail(Errc::InvalidArgument, "unknown target '" + f->target + "'");
      }
    }
    search::SearchOptions opts;
    opts.limit = f->limit;
    const auto hits = search::find_configurations(q, opts);
    std::size_t bad = 0;
    for (const auto& h : hits) bad += search::revalidate(q, h) ? 0 : 1;
    if (!f->out.empty()) {
      std::ofstream os(f->out);
      if (!os) fail(Errc::InvalidArgument, "cannot write " + f->out);
      search::write_hits_csv(os, q, hits);
    }
    Outcome out;
    out.primary = std::to_string(hits.size());
    const std::vector<search::ConfigurationHit> head(hits.begin(), hits.begin() + std::min<std::size_t>(hits.size(), 20));
    out.detail = {{"hits", hits.size()}, {"revalidation_failures", bad}, {"first_hits", search::hits_to_json(head)}};
    if (!f->out.empty()) out.detail["csv"] = f->out;
    if (f->profile) {
      const auto prof = search::min_y_profile(q);
      json hist = json::object();
      for (auto [y, c] : prof.histogram) hist[std::to_string(y)] = c;
      out.detail["profile"] = {{"x_with_hits", prof.x_with_hits()}, {"max_min_y", prof.max_min_y}, {"histogram", hist}};
    }
    out.exit_code = bad == 0 ? 0 : 1;
    return out;
  });
}

}  // namespace polyprimes::cli
