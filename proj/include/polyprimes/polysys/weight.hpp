#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyprimes/polysys/system.hpp"

namespace polyprimes::polysys {

/// l x D table; entry (j, k) sits at rows[j-1][k-1].
struct WeightMatrix {
  std::vector<std::vector<unsigned>> rows;

  std::size_t l() const noexcept { return rows.size(); }
  std::size_t D() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
  unsigned at(std::size_t j, std::size_t k) const { return rows.at(j - 1).at(k - 1); }
  bool is_zero() const noexcept;
  std::string to_string() const;
  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;
};

/// Weight matrix of {R_alpha - R_alpha_star}. Each nonzero shifted node is
/// filed under its highest slot j of positive y-degree; entry (j, k) counts
/// distinct leading coefficients among degree-k members of that slot.
/// D defaults to the system's maximal component y-degree.
WeightMatrix weight_matrix(const ShiftPolySystem& s, int alpha_star, bool active_only,
                           std::optional<std::size_t> D = std::nullopt);

/// Reverse lexicographic: positions scanned from (l, D) down, j outer and
/// k inner; the first differing entry decides. Throws ShapeMismatch.
bool weight_less(const WeightMatrix& a, const WeightMatrix& b);

}  // namespace polyprimes::polysys
