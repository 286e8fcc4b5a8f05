#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyprimes/polysys/system.hpp"
#include "polyprimes/polysys/weight.hpp"

namespace polyprimes::polysys {

enum class SelectionRule {
  // First step as MinWeight; afterwards the node handed over by the previous
  // step (a member of the lowest leading-term class relative to the previous
  // shift), so consecutive chosen weights strictly decrease.
  Descent,
  // Active nonlinear node with the smallest weight matrix, ties by lowest id.
  MinWeight,
  // Node whose weight matrix has the highest first nonzero position in scan
  // order, ties by lowest id. Kept for replaying older certificates.
  LargestFirstNonzero,
};

const char* selection_rule_name(SelectionRule r) noexcept;
SelectionRule parse_selection_rule(const std::string& name);

struct PetOptions {
  SelectionRule rule = SelectionRule::Descent;
  // Re-verify general position w.r.t. the new distinguished node after every
  // doubling. Quadratic in the node count.
  bool check_invariants = true;
  std::size_t step_cap = 10000;
  // Every step doubles the node count; refuse to step a larger system.
  std::size_t node_cap = std::size_t{1} << 14;
  // Weight matrix width; pet_linearize pins it to the initial system's degree.
  std::optional<std::size_t> width;
  // Overrides the selection rule for this step.
  std::optional<int> forced;
};

struct StepRecord {
  int chosen = 0;
  WeightMatrix weight_before;
  // Active node of the new system whose weight drops below weight_before.
  int after_node = 0;
  WeightMatrix weight_after;
  // after_node is nonlinear, so it can be the next step's choice.
  bool after_is_nonlinear = false;
  std::vector<std::string> parameters_added;
  std::size_t nodes_after = 0;
};

struct StepResult {
  ShiftPolySystem system;
  int distinguished = 0;
  StepRecord record;
};

/// deg_y(R_alpha - R_alpha0) >= 2 for an active node.
std::vector<int> active_nonlinear_nodes(const ShiftPolySystem& s, int alpha0);

/// Member of the lowest (slot, degree) leading-term class relative to the
/// coordinate origin, preferring nonlinear members outside the distinguished
/// node's class. Shifting by it removes that class.
std::optional<int> descent_successor(const ShiftPolySystem& s, int alpha0);

/// One shift-and-double step. Throws NoNonlinearNode, GeneralPositionViolated
/// and WeightNotDecreasing (the last two flag a bug or malformed input).
StepResult pet_step(const ShiftPolySystem& s, const PetOptions& opts = {});

struct LinearPart {
  int node = 0;
  std::string label;
  VecPoly b;  // coefficient of y, free of y
  VecPoly c;  // constant term in y
};

struct LinearizationCertificate {
  ShiftPolySystem initial;
  std::vector<StepRecord> steps;
  ShiftPolySystem final_system;
  std::vector<LinearPart> linear;
  SelectionRule rule = SelectionRule::Descent;
  std::size_t step_cap = 0;
  std::size_t width = 0;
  // The directions were linearly dependent, so the steps run on the
  // coordinate form of the initial system.
  bool coordinate_basis = false;

  int distinguished() const { return *initial.distinguished; }
  std::size_t step_count() const noexcept { return steps.size(); }
  /// The b polynomials, the box-norm directions controlling the distinguished function.
  std::vector<VecPoly> directions_b() const;
};

/// Runs pet_step until every active node is at most linear relative to the
/// distinguished node, then extracts y-coefficients and offsets.
/// Throws BudgetExceeded past node_cap and IterationCapExceeded past step_cap.
LinearizationCertificate pet_linearize(const ShiftPolySystem& s, const PetOptions& opts = {});

}  // namespace polyprimes::polysys
