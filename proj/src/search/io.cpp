#include "polyprimes/search/io.hpp"

#include "polyprimes/error.hpp"

namespace polyprimes::search {

ConfigurationQuery query_from_json(const nlohmann::json& j) {
  try {
    ConfigurationQuery q;
    q.dimension = j.at("dimension").get<int>();
    for (const auto& c : j.at("polynomials")) {
      if (c.is_string()) {
        q.P.push_back(parse_scalar_poly(c.get<std::string>()));
      } else {
        q.P.emplace_back(c.get<std::vector<std::int64_t>>());
      }
    }
    q.V = j.at("directions").get<std::vector<std::vector<std::int64_t>>>();
    q.N = j.at("N").get<std::int64_t>();
    q.y_max = j.at("y_max").get<std::int64_t>();
    q.cyclic = j.value("cyclic", false);
    const auto& t = j.at("target");
    const auto kind = t.at("kind").get<std::string>();
    if (kind == "primes") {
      q.target = prime_lattice(q.dimension, q.N);
    } else if (kind == "residue") {
      q.target = residue_prime_lattice(q.dimension, q.N, t.at("modulus").get<std::int64_t>(),
                                       t.at("residue").get<std::int64_t>());
    } else if (kind == "axis_set") {
      std::vector<bool> members(static_cast<std::size_t>(q.N) + 1, false);
      for (auto v : t.at("members").get<std::vector<std::int64_t>>()) {
        if (v >= 1 && v <= q.N) members[v] = true;
      }
      q.target = LatticeSet::product(q.dimension, std::move(members));
    } else if (kind == "points") {
      q.target = LatticeSet::explicit_points(q.dimension, t.at("points").get<std::vector<std::vector<std::int64_t>>>());
    } else {
      fail(Errc::ParseError, "query: unknown target kind '" + kind + "'");
    }
    q.validate();
    return q;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("query: ") + e.what());
  }
}

nlohmann::json query_to_json(const ConfigurationQuery& q) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : q.P) polys.push_back(p.coeffs);
  nlohmann::json target;
  if (q.target.is_product()) {
    target = {{"kind", "axis_set"}, {"members", q.target.axis_list()}};
  } else {
    target = {{"kind", "points"}, {"points", q.target.points()}};
  }
  return {{"dimension", q.dimension}, {"polynomials", polys}, {"directions", q.V}, {"N", q.N},
          {"y_max", q.y_max},         {"cyclic", q.cyclic},   {"target", target}};
}

void write_hits_csv(std::ostream& os, const ConfigurationQuery& q, const std::vector<ConfigurationHit>& hits) {
  os << 'y';
  for (int i = 1; i <= q.dimension; ++i) os << ",x" << i;
  for (std::size_t j = 0; j < q.P.size(); ++j) {
    for (int i = 1; i <= q.dimension; ++i) os << ",p" << j << '_' << i;
  }
  os << '\n';
  for (const auto& h : hits) {
    os << h.y;
    for (auto v : h.x) os << ',' << v;
    for (const auto& p : h.points) {
      for (auto v : p) os << ',' << v;
    }
    os << '\n';
  }
}

nlohmann::json hits_to_json(const std::vector<ConfigurationHit>& hits) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& h : hits) out.push_back({{"y", h.y}, {"x", h.x}, {"points", h.points}});
  return out;
}

}  // namespace polyprimes::search
