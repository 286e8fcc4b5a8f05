#include "polyprimes/polysys/pet.hpp"

#include <algorithm>

#include "polyprimes/error.hpp"

namespace polyprimes::polysys {

const char* selection_rule_name(SelectionRule r) noexcept {
  switch (r) {
    case SelectionRule::Descent: return "descent";
    case SelectionRule::MinWeight: return "min-weight";
    case SelectionRule::LargestFirstNonzero: return "largest-first-nonzero";
  }
  return "unknown";
}

SelectionRule parse_selection_rule(const std::string& name) {
  if (name == "descent") return SelectionRule::Descent;
  if (name == "min-weight") return SelectionRule::MinWeight;
  if (name == "largest-first-nonzero") return SelectionRule::LargestFirstNonzero;
  fail(Errc::InvalidArgument, "unknown selection rule '" + name + "'");
}

namespace {

int require_distinguished(const ShiftPolySystem& s) {
  if (!s.distinguished) fail(Errc::InvalidArgument, "system has no distinguished node");
  return *s.distinguished;
}

// Scan-order rank of the first nonzero entry; -1 for the zero matrix.
long first_nonzero_rank(const WeightMatrix& w) {
  long rank = static_cast<long>(w.l() * w.D());
  for (std::size_t j = w.l(); j-- > 0;) {
    for (std::size_t k = w.D(); k-- > 0;) {
      --rank;
      if (w.rows[j][k] != 0) return rank;
    }
  }
  return -1;
}

struct Choice {
  int id;
  WeightMatrix w;
};

std::optional<Choice> min_weight(const ShiftPolySystem& s, const std::vector<int>& ids, std::size_t width) {
  std::optional<Choice> best;
  for (int id : ids) {
    WeightMatrix w = weight_matrix(s, id, true, width);
    if (!best || weight_less(w, best->w)) best = Choice{id, std::move(w)};
  }
  return best;
}

}  // namespace

std::vector<int> active_nonlinear_nodes(const ShiftPolySystem& s, int alpha0) {
  const VecPoly& base = s.node(alpha0).poly;
  std::vector<int> out;
  for (const auto& n : s.nodes) {
    if (n.active && (n.poly - base).deg_y() >= 2) out.push_back(n.id);
  }
  return out;
}

namespace {

struct ClassKey {
  std::size_t slot;
  unsigned degree;
  IntPoly lead;
  auto rank() const { return std::pair{slot, degree}; }
};

// Filing of a node relative to the origin: highest slot of positive degree.
std::optional<ClassKey> filing(const VecPoly& p) {
  for (std::size_t j = p.size(); j-- > 0;) {
    const unsigned k = p[j].deg_y();
    if (k > 0) return ClassKey{j, k, p[j].y_coefficient(k)};
  }
  return std::nullopt;
}

// Active nodes of the lowest (slot, degree) filing, best successor first:
// nonlinear members of classes other than the distinguished node's, then
// nonlinear members of its class, then the rest.
std::vector<std::pair<int, bool>> lowest_class_members(const ShiftPolySystem& s, int alpha0) {
  const VecPoly& base = s.node(alpha0).poly;
  std::vector<std::pair<const Node*, ClassKey>> filed;
  for (const auto& n : s.nodes) {
    if (!n.active) continue;
    if (auto k = filing(n.poly)) filed.emplace_back(&n, std::move(*k));
  }
  if (filed.empty()) return {};
  auto lowest = filed.front().second.rank();
  for (const auto& [n, k] : filed) lowest = std::min(lowest, k.rank());

  std::optional<IntPoly> distinguished_lead;
  if (auto k = filing(base); k && k->rank() == lowest) distinguished_lead = k->lead;

  std::vector<std::pair<int, bool>> tiers[3];
  for (const auto& [n, k] : filed) {
    if (k.rank() != lowest) continue;
    const bool nonlinear = (n->poly - base).deg_y() >= 2;
    const bool own_class = distinguished_lead && k.lead == *distinguished_lead;
    tiers[!nonlinear ? 2 : own_class ? 1 : 0].emplace_back(n->id, nonlinear);
  }
  std::vector<std::pair<int, bool>> out;
  for (auto& t : tiers) out.insert(out.end(), t.begin(), t.end());
  return out;
}

}  // namespace

std::optional<int> descent_successor(const ShiftPolySystem& s, int alpha0) {
  auto members = lowest_class_members(s, alpha0);
  if (members.empty() || !members.front().second) return std::nullopt;
  return members.front().first;
}

StepResult pet_step(const ShiftPolySystem& s, const PetOptions& opts) {
  const int alpha0 = require_distinguished(s);
  const std::size_t width = opts.width ? *opts.width : std::max<std::size_t>(1, s.max_deg_y());

  auto candidates = active_nonlinear_nodes(s, alpha0);
  if (candidates.empty()) fail(Errc::NoNonlinearNode, "every active node is linear relative to the distinguished node");

  Choice chosen{0, {}};
  if (opts.forced) {
    if (std::find(candidates.begin(), candidates.end(), *opts.forced) == candidates.end()) {
      fail(Errc::InvalidArgument, "node " + std::to_string(*opts.forced) + " is not an active nonlinear node");
    }
    chosen = Choice{*opts.forced, weight_matrix(s, *opts.forced, true, width)};
  } else if (opts.rule == SelectionRule::LargestFirstNonzero) {
    long best_rank = -2;
    for (int id : candidates) {
      WeightMatrix w = weight_matrix(s, id, true, width);
      const long r = first_nonzero_rank(w);
      if (r > best_rank) {
        best_rank = r;
        chosen = Choice{id, std::move(w)};
      }
    }
  } else {
    chosen = *min_weight(s, candidates, width);
  }

  StepResult out;
  out.system = double_system(shift_system(s, chosen.id));
  out.distinguished = *out.system.distinguished;
  out.record.chosen = chosen.id;
  out.record.weight_before = chosen.w;
  out.record.parameters_added = {out.system.parameters.end()[-2], out.system.parameters.end()[-1]};
  out.record.nodes_after = out.system.nodes.size();

  if (opts.check_invariants) {
    auto gp = is_general_position_wrt(out.system, out.distinguished);
    if (!gp) {
      const auto& w = *gp.witness;
      fail(Errc::GeneralPositionViolated,
           "doubled system leaves general position at nodes " + std::to_string(w.alpha) + ", " +
               std::to_string(w.beta) + ", coordinate " + std::to_string(w.coordinate + 1) + ": " + w.reason);
    }
  }

  // The shifted origin is the chosen node, so the lowest class is read off
  // the new system directly. Removing it lowers the weight.
  auto members = lowest_class_members(out.system, out.distinguished);
  std::optional<Choice> after;
  if (!members.empty() && members.front().second) {
    after = Choice{members.front().first, weight_matrix(out.system, members.front().first, true, width)};
    out.record.after_is_nonlinear = true;
  } else {
    auto nl = active_nonlinear_nodes(out.system, out.distinguished);
    if (auto best = min_weight(out.system, nl, width); best && weight_less(best->w, chosen.w)) {
      after = std::move(best);
      out.record.after_is_nonlinear = true;
    } else if (!members.empty()) {
      after = Choice{members.front().first, weight_matrix(out.system, members.front().first, true, width)};
    }
  }
  if (!after) fail(Errc::WeightNotDecreasing, "doubled system has no active node of positive degree");
  out.record.after_node = after->id;
  out.record.weight_after = after->w;
  if (!weight_less(after->w, chosen.w)) {
    fail(Errc::WeightNotDecreasing, "weight " + after->w.to_string() + " at node " + std::to_string(after->id) +
                                        " does not drop below " + chosen.w.to_string());
  }
  return out;
}

std::vector<VecPoly> LinearizationCertificate::directions_b() const {
  std::vector<VecPoly> out;
  out.reserve(linear.size());
  for (const auto& lp : linear) out.push_back(lp.b);
  return out;
}

LinearizationCertificate pet_linearize(const ShiftPolySystem& s, const PetOptions& opts) {
  s.validate();
  const int alpha0 = require_distinguished(s);
  auto gp = is_general_position_wrt(s, alpha0);
  if (!gp) {
    const auto& w = *gp.witness;
    fail(Errc::GeneralPositionViolated, "input not in general position w.r.t. node " + std::to_string(alpha0) +
                                            ": nodes " + std::to_string(w.alpha) + ", " + std::to_string(w.beta) +
                                            ", coordinate " + std::to_string(w.coordinate + 1));
  }

  LinearizationCertificate cert;
  cert.initial = s;
  cert.rule = opts.rule;
  cert.step_cap = opts.step_cap;
  cert.width = std::max<std::size_t>(1, s.max_deg_y());
  PetOptions step_opts = opts;
  step_opts.width = cert.width;

  // Linearity is read off basis components, which only agrees with the
  // coordinate degrees when the directions are independent.
  cert.coordinate_basis = !directions_independent(s.directions);
  ShiftPolySystem cur = cert.coordinate_basis ? to_coordinate_basis(s) : s;
  while (!active_nonlinear_nodes(cur, *cur.distinguished).empty()) {
    if (cert.steps.size() >= opts.step_cap) {
      fail(Errc::IterationCapExceeded, "PET induction did not finish within " + std::to_string(opts.step_cap) + " steps");
    }
    if (cur.nodes.size() > opts.node_cap) {
      fail(Errc::BudgetExceeded, "PET induction reached " + std::to_string(cur.nodes.size()) + " nodes after " +
                                     std::to_string(cert.steps.size()) + " steps (node cap " +
                                     std::to_string(opts.node_cap) + ")");
    }
    step_opts.forced.reset();
    if (opts.rule == SelectionRule::Descent && !cert.steps.empty() && cert.steps.back().after_is_nonlinear) {
      step_opts.forced = cert.steps.back().after_node;
    }
    auto r = pet_step(cur, step_opts);
    cert.steps.push_back(std::move(r.record));
    cur = std::move(r.system);
  }

  const int a0 = *cur.distinguished;
  const VecPoly& base = cur.node(a0).poly;
  for (const auto& n : cur.nodes) {
    if (!n.active || n.id == a0) continue;
    const VecPoly diff = n.poly - base;
    if (diff.deg_y() != 1) {
      fail(Errc::GeneralPositionViolated,
           "active node " + std::to_string(n.id) + " is constant in y relative to the distinguished node");
    }
    LinearPart lp{n.id, n.label, diff.y_coefficient(1), diff.y_coefficient(0)};
    for (std::size_t i = 0; i < static_cast<std::size_t>(cur.dimension); ++i) {
      if (project(lp.b, cur.directions, i).is_zero()) {
        fail(Errc::GeneralPositionViolated, "direction polynomial of node " + std::to_string(n.id) +
                                                " has a vanishing coordinate " + std::to_string(i + 1));
      }
    }
    cert.linear.push_back(std::move(lp));
  }
  cert.final_system = std::move(cur);
  return cert;
}

}  // namespace polyprimes::polysys
