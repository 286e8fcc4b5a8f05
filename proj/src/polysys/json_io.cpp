#include "polyprimes/polysys/json_io.hpp"

#include <fstream>
#include <map>

#include "polyprimes/error.hpp"

namespace polyprimes::polysys {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(Errc::ParseError, what); }

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    parse_fail(std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> registry(const std::vector<std::string>& params) {
  std::vector<std::string> names{"y"};
  names.insert(names.end(), params.begin(), params.end());
  return names;
}

DirectionSet identity_basis(int d) {
  DirectionSet v(d, std::vector<std::int64_t>(d, 0));
  for (int i = 0; i < d; ++i) v[i][i] = 1;
  return v;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_fail(path + ": " + e.what());
  }
}

json poly_to_json(const IntPoly& p, std::span<const std::string> names) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) exps[names[i]] = m[i];
    }
    terms.push_back({{"exponents", exps}, {"coeff", c.get_str()}});
  }
  return terms;
}

IntPoly poly_from_json(const json& terms, std::span<const std::string> names) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  IntPoly p(names.size());
  if (!terms.is_array()) parse_fail("polynomial terms must be an array");
  for (const auto& t : terms) {
    Monomial m(names.size(), 0);
    if (t.contains("exponents")) {
      for (const auto& [name, e] : t.at("exponents").items()) {
        auto it = index.find(name);
        if (it == index.end()) parse_fail("unknown variable '" + name + "'");
        const int v = e.get<int>();
        if (v < 0 || v > 65535) parse_fail("exponent out of range for '" + name + "'");
        m[it->second] = static_cast<std::uint16_t>(v);
      }
    }
    const json& cj = t.at("coeff");
    mpz_class c;
    if (cj.is_string()) {
      if (c.set_str(cj.get<std::string>(), 10) != 0) parse_fail("bad coefficient '" + cj.get<std::string>() + "'");
    } else if (cj.is_number_integer()) {
      c = static_cast<long>(cj.get<std::int64_t>());
    } else {
      parse_fail("coefficient must be a decimal string or integer");
    }
    p.add_term(m, c);
  }
  return p;
}

json vec_to_json(const VecPoly& p, std::span<const std::string> names) {
  json comps = json::array();
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j].is_zero()) continue;
    comps.push_back({{"direction", j + 1}, {"terms", poly_to_json(p[j], names)}});
  }
  return comps;
}

VecPoly vec_from_json(const json& components, std::size_t ncomponents, std::span<const std::string> names) {
  VecPoly p(ncomponents, names.size());
  if (!components.is_array()) parse_fail("components must be an array");
  for (const auto& c : components) {
    const auto j = c.at("direction").get<std::int64_t>();
    if (j < 1 || static_cast<std::size_t>(j) > ncomponents) parse_fail("direction index " + std::to_string(j) + " out of range");
    p[j - 1] += poly_from_json(c.at("terms"), names);
  }
  return p;
}

json system_to_json(const ShiftPolySystem& s) {
  const auto names = s.variable_names();
  json nodes = json::array();
  for (const auto& n : s.nodes) {
    json jn = {{"id", n.id}, {"components", vec_to_json(n.poly, names)}, {"active", n.active}, {"function", n.label}};
    if (n.parent) {
      jn["parent"] = *n.parent;
      jn["copy"] = n.copy;
    }
    nodes.push_back(std::move(jn));
  }
  json j = {{"dimension", s.dimension}, {"directions", s.directions}, {"parameters", s.parameters}, {"nodes", nodes}};
  if (s.distinguished) j["distinguished"] = *s.distinguished;
  return j;
}

ShiftPolySystem system_from_json(const json& j) {
  return guarded("system", [&] {
    ShiftPolySystem s;
    s.dimension = j.at("dimension").get<int>();
    s.directions = j.at("directions").get<DirectionSet>();
    if (j.contains("parameters")) s.parameters = j.at("parameters").get<std::vector<std::string>>();
    const auto names = registry(s.parameters);
    for (const auto& jn : j.at("nodes")) {
      Node n;
      n.id = jn.at("id").get<int>();
      n.poly = vec_from_json(jn.value("components", json::array()), s.directions.size(), names);
      n.active = jn.value("active", true);
      n.label = jn.value("function", "f" + std::to_string(n.id));
      if (jn.contains("parent")) {
        n.parent = jn.at("parent").get<int>();
        n.copy = jn.value("copy", 0);
      }
      s.nodes.push_back(std::move(n));
    }
    if (j.contains("distinguished") && !j.at("distinguished").is_null()) s.distinguished = j.at("distinguished").get<int>();
    s.validate();
    return s;
  });
}

json weight_to_json(const WeightMatrix& w) { return w.rows; }

WeightMatrix weight_from_json(const json& j) {
  return guarded("weight matrix", [&] { return WeightMatrix{j.get<std::vector<std::vector<unsigned>>>()}; });
}

json certificate_to_json(const LinearizationCertificate& c) {
  json steps = json::array();
  for (const auto& st : c.steps) {
    steps.push_back({{"node", st.chosen},
                     {"weight_before", weight_to_json(st.weight_before)},
                     {"after_node", st.after_node},
                     {"weight_after", weight_to_json(st.weight_after)},
                     {"parameters_added", st.parameters_added},
                     {"nodes_after", st.nodes_after}});
  }
  const auto names = c.final_system.variable_names();
  json linear = json::array();
  for (const auto& lp : c.linear) {
    linear.push_back({{"node", lp.node}, {"function", lp.label}, {"b", vec_to_json(lp.b, names)}, {"c", vec_to_json(lp.c, names)}});
  }
  return {{"distinguished", c.distinguished()},
          {"selection_rule", selection_rule_name(c.rule)},
          {"order", "reverse-lex: j descending, then k descending; first differing entry decides"},
          {"step_cap", c.step_cap},
          {"weight_width", c.width},
          {"coordinate_basis", c.coordinate_basis},
          {"step_count", c.steps.size()},
          {"initial_system", system_to_json(c.initial)},
          {"steps", steps},
          {"final_system", system_to_json(c.final_system)},
          {"linear_part", linear}};
}

LinearizationCertificate certificate_from_json(const json& j) {
  return guarded("certificate", [&] {
    LinearizationCertificate c;
    c.initial = system_from_json(j.at("initial_system"));
    c.final_system = system_from_json(j.at("final_system"));
    c.rule = parse_selection_rule(j.value("selection_rule", std::string("min-weight")));
    c.step_cap = j.value("step_cap", std::size_t{10000});
    c.width = j.value("weight_width", std::size_t{1});
    c.coordinate_basis = j.value("coordinate_basis", false);
    for (const auto& st : j.at("steps")) {
      StepRecord r;
      r.chosen = st.at("node").get<int>();
      r.weight_before = weight_from_json(st.at("weight_before"));
      r.after_node = st.at("after_node").get<int>();
      r.weight_after = weight_from_json(st.at("weight_after"));
      r.parameters_added = st.at("parameters_added").get<std::vector<std::string>>();
      r.nodes_after = st.value("nodes_after", std::size_t{0});
      c.steps.push_back(std::move(r));
    }
    const auto names = c.final_system.variable_names();
    const std::size_t l = c.final_system.ncomponents();
    for (const auto& lp : j.at("linear_part")) {
      c.linear.push_back(LinearPart{lp.at("node").get<int>(), lp.value("function", std::string{}),
                                    vec_from_json(lp.at("b"), l, names), vec_from_json(lp.at("c"), l, names)});
    }
    if (!c.initial.distinguished) parse_fail("certificate initial system lacks a distinguished node");
    return c;
  });
}

json family_to_json(const PolyFamily& q) {
  const auto names = registry(q.parameters);
  json polys = json::array();
  for (const auto& p : q.polys) polys.push_back({{"components", vec_to_json(p, names)}});
  return {{"dimension", q.dimension}, {"directions", q.directions}, {"parameters", q.parameters}, {"polynomials", polys}};
}

PolyFamily family_from_json(const json& j) {
  return guarded("polynomial family", [&] {
    PolyFamily q;
    q.dimension = j.at("dimension").get<int>();
    q.directions = j.contains("directions") ? j.at("directions").get<DirectionSet>() : identity_basis(q.dimension);
    if (j.contains("parameters")) q.parameters = j.at("parameters").get<std::vector<std::string>>();
    const auto names = registry(q.parameters);
    for (const auto& jp : j.at("polynomials")) {
      q.polys.push_back(vec_from_json(jp.at("components"), q.directions.size(), names));
    }
    q.validate();
    return q;
  });
}

}  // namespace polyprimes::polysys
