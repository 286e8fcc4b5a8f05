#include "polyprimes/polysys/weight.hpp"

#include <map>
#include <set>
#include <sstream>

#include "polyprimes/error.hpp"

namespace polyprimes::polysys {

bool WeightMatrix::is_zero() const noexcept {
  for (const auto& r : rows) {
    for (unsigned v : r) {
      if (v != 0) return false;
    }
  }
  return true;
}

std::string WeightMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (j) os << ",";
    os << "[";
    for (std::size_t k = 0; k < rows[j].size(); ++k) {
      if (k) os << ",";
      os << rows[j][k];
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

WeightMatrix weight_matrix(const ShiftPolySystem& s, int alpha_star, bool active_only,
                           std::optional<std::size_t> D) {
  const VecPoly& base = s.node(alpha_star).poly;
  const std::size_t l = s.ncomponents();
  const std::size_t dmax = D ? *D : s.max_deg_y();

  std::map<std::pair<std::size_t, unsigned>, std::set<IntPoly>> classes;
  for (const auto& n : s.nodes) {
    if (active_only && !n.active) continue;
    const VecPoly diff = n.poly - base;
    for (std::size_t j = l; j-- > 0;) {
      const unsigned k = diff[j].deg_y();
      if (k == 0) continue;
      classes[{j, k}].insert(diff[j].y_coefficient(k));
      break;
    }
  }

  WeightMatrix w;
  w.rows.assign(l, std::vector<unsigned>(dmax, 0));
  for (const auto& [key, set] : classes) {
    const auto [j, k] = key;
    if (k > dmax) fail(Errc::ShapeMismatch, "node y-degree exceeds weight matrix width");
    w.rows[j][k - 1] = static_cast<unsigned>(set.size());
  }
  return w;
}

bool weight_less(const WeightMatrix& a, const WeightMatrix& b) {
  if (a.l() != b.l() || a.D() != b.D()) fail(Errc::ShapeMismatch, "weight matrices differ in shape");
  for (std::size_t j = a.l(); j-- > 0;) {
    for (std::size_t k = a.D(); k-- > 0;) {
      if (a.rows[j][k] != b.rows[j][k]) return a.rows[j][k] < b.rows[j][k];
    }
  }
  return false;
}

}  // namespace polyprimes::polysys
