#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyprimes/polysys/vec_poly.hpp"

namespace polyprimes::polysys {

inline constexpr const char* kMajorantLabel = "nu";

struct Node {
  int id = 0;
  VecPoly poly;
  bool active = true;
  std::string label;
  // Doubling lineage: id of the parent node and which copy (0 = kept verbatim).
  std::optional<int> parent;
  int copy = 0;
};

/// Nodes R_alpha(y, h1..ht) written in the direction basis v_1..v_l of Z^d.
struct ShiftPolySystem {
  int dimension = 0;
  DirectionSet directions;
  std::vector<std::string> parameters;
  std::vector<Node> nodes;
  std::optional<int> distinguished;

  std::size_t nvars() const noexcept { return parameters.size() + 1; }
  std::size_t ncomponents() const noexcept { return directions.size(); }
  std::vector<std::string> variable_names() const;

  const Node& node(int id) const;
  Node& node(int id);
  bool has_node(int id) const noexcept;
  int next_free_id() const noexcept;
  unsigned max_deg_y() const noexcept;

  /// Throws InvalidSystem-style errors (ShapeMismatch, ArityMismatch, UnknownNode).
  void validate() const;
};

/// Failing pair and zero-based coordinate. beta == alpha marks a nonzero
/// projection failure of a single polynomial.
struct GpWitness {
  int alpha = 0;
  int beta = 0;
  std::size_t coordinate = 0;
  std::string reason;
};

struct GpResult {
  bool ok = true;
  std::optional<GpWitness> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Every coordinate projection of every pairwise difference is nonzero and
/// keeps the y-degree of the whole difference.
GpResult is_general_position(const ShiftPolySystem& s);

/// Linear nodes relative to alpha0 (y-degree of R - R_alpha0 exactly 1)
/// pairwise differ in y-degree exactly 1, on top of general position.
GpResult is_general_position_wrt(const ShiftPolySystem& s, int alpha0);

/// Every coordinate projection of every pairwise difference is non-constant.
bool is_nondegenerate(const std::vector<VecPoly>& q, const DirectionSet& directions);

/// Rank of the direction set equals its size.
bool directions_independent(const DirectionSet& directions);

/// Same nodes written over the standard basis e_1..e_d.
ShiftPolySystem to_coordinate_basis(const ShiftPolySystem& s);

ShiftPolySystem shift_system(const ShiftPolySystem& s, int alpha_star);

/// Nodes constant in y (as Z^d polynomials) are kept once and deactivated; every other node is
/// copied with y -> y + h{t+1} and y -> y + h{t+2}.
ShiftPolySystem double_system(const ShiftPolySystem& s);

}  // namespace polyprimes::polysys
