#include "polyprimes/polysys/system.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "polyprimes/error.hpp"

namespace polyprimes::polysys {

std::vector<std::string> ShiftPolySystem::variable_names() const {
  std::vector<std::string> names{"y"};
  names.insert(names.end(), parameters.begin(), parameters.end());
  return names;
}

const Node& ShiftPolySystem::node(int id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return n;
  }
  fail(Errc::UnknownNode, "no node with id " + std::to_string(id));
}

Node& ShiftPolySystem::node(int id) {
  for (auto& n : nodes) {
    if (n.id == id) return n;
  }
  fail(Errc::UnknownNode, "no node with id " + std::to_string(id));
}

bool ShiftPolySystem::has_node(int id) const noexcept {
  return std::any_of(nodes.begin(), nodes.end(), [id](const Node& n) { return n.id == id; });
}

int ShiftPolySystem::next_free_id() const noexcept {
  int m = -1;
  for (const auto& n : nodes) m = std::max(m, n.id);
  return m + 1;
}

unsigned ShiftPolySystem::max_deg_y() const noexcept {
  unsigned d = 0;
  for (const auto& n : nodes) d = std::max(d, n.poly.deg_y());
  return d;
}

void ShiftPolySystem::validate() const {
  if (dimension < 1) fail(Errc::ShapeMismatch, "dimension must be positive");
  if (directions.empty()) fail(Errc::ShapeMismatch, "system needs at least one direction");
  for (const auto& v : directions) {
    if (static_cast<int>(v.size()) != dimension) fail(Errc::ShapeMismatch, "direction length differs from dimension");
  }
  std::set<std::string> names{"y"};
  for (const auto& p : parameters) {
    if (!names.insert(p).second) fail(Errc::ArityMismatch, "duplicate variable name " + p);
  }
  std::set<int> ids;
  for (const auto& n : nodes) {
    if (!ids.insert(n.id).second) fail(Errc::UnknownNode, "duplicate node id " + std::to_string(n.id));
    if (n.poly.size() != directions.size()) fail(Errc::ShapeMismatch, "node component count differs from direction count");
    if (n.poly.nvars() != nvars()) fail(Errc::ArityMismatch, "node polynomial uses a different registry");
  }
  if (distinguished && !ids.contains(*distinguished)) {
    fail(Errc::UnknownNode, "distinguished node " + std::to_string(*distinguished) + " does not exist");
  }
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  return (h ^ v) * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL;
}

// y-coefficients of one polynomial, each with a hash; equal hashes are
// confirmed by exact comparison, so collisions cannot change a verdict.
struct Slices {
  std::vector<IntPoly> coeff;  // coeff[k] multiplies y^k
  std::vector<std::uint64_t> hash;

  explicit Slices(const IntPoly& p) {
    const unsigned deg = p.is_zero() ? 0 : p.deg_y();
    for (unsigned k = 0; k <= deg; ++k) {
      coeff.push_back(p.y_coefficient(k));
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (const auto& [m, c] : coeff.back().terms()) {
        for (auto e : m) h = mix(h, e);
        h = mix(h, static_cast<std::uint64_t>(mpz_sgn(c.get_mpz_t())) + 7);
        h = mix(h, mpz_get_ui(c.get_mpz_t()));
      }
      hash.push_back(h);
    }
  }

  bool same(const Slices& o, std::size_t k) const {
    const bool in_a = k < coeff.size() && !coeff[k].is_zero();
    const bool in_b = k < o.coeff.size() && !o.coeff[k].is_zero();
    if (!in_a || !in_b) return in_a == in_b;
    return hash[k] == o.hash[k] && coeff[k] == o.coeff[k];
  }
};

// y-degree of a - b, nullopt when a == b.
std::optional<unsigned> difference_degree(const Slices& a, const Slices& b) {
  for (std::size_t k = std::max(a.coeff.size(), b.coeff.size()); k-- > 0;) {
    if (!a.same(b, k)) return static_cast<unsigned>(k);
  }
  return std::nullopt;
}

// Per node, the slices of every coordinate projection or every basis component.
std::vector<std::vector<Slices>> slice_table(const ShiftPolySystem& s, bool coordinate) {
  std::vector<std::vector<Slices>> out;
  out.reserve(s.nodes.size());
  for (const auto& n : s.nodes) {
    std::vector<Slices> row;
    if (coordinate) {
      for (const auto& c : coordinates(n.poly, s.directions)) row.emplace_back(c);
    } else {
      for (const auto& c : n.poly.components()) row.emplace_back(c);
    }
    out.push_back(std::move(row));
  }
  return out;
}

// Coordinates of a difference must all be nonzero with full y-degree.
std::optional<GpWitness> check_difference(const std::vector<Slices>& a, const std::vector<Slices>& b, int ida, int idb) {
  std::vector<std::optional<unsigned>> deg(a.size());
  unsigned top = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    deg[i] = difference_degree(a[i], b[i]);
    if (deg[i]) top = std::max(top, *deg[i]);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!deg[i]) return GpWitness{ida, idb, i, "coordinate projection vanishes"};
    if (*deg[i] != top) return GpWitness{ida, idb, i, "coordinate projection drops y-degree"};
  }
  return std::nullopt;
}

GpResult general_position(const ShiftPolySystem& s, const std::vector<std::vector<Slices>>& coords) {
  for (std::size_t a = 0; a < s.nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < s.nodes.size(); ++b) {
      auto w = check_difference(coords[a], coords[b], s.nodes[a].id, s.nodes[b].id);
      if (w) return {false, w};
    }
  }
  return {true, std::nullopt};
}

// Basis-component y-degree of a - b; 0 when equal, matching VecPoly::deg_y.
unsigned component_degree(const std::vector<Slices>& a, const std::vector<Slices>& b) {
  unsigned top = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (auto k = difference_degree(a[j], b[j])) top = std::max(top, *k);
  }
  return top;
}

}  // namespace

GpResult is_general_position(const ShiftPolySystem& s) { return general_position(s, slice_table(s, true)); }

GpResult is_general_position_wrt(const ShiftPolySystem& s, int alpha0) {
  auto gp = general_position(s, slice_table(s, true));
  if (!gp) return gp;
  const auto comps = slice_table(s, false);
  s.node(alpha0);
  std::size_t base = 0;
  while (s.nodes[base].id != alpha0) ++base;
  std::vector<std::size_t> linear;
  for (std::size_t a = 0; a < s.nodes.size(); ++a) {
    if (component_degree(comps[a], comps[base]) == 1) linear.push_back(a);
  }
  for (std::size_t a = 0; a < linear.size(); ++a) {
    for (std::size_t b = a + 1; b < linear.size(); ++b) {
      if (component_degree(comps[linear[a]], comps[linear[b]]) != 1) {
        return {false, GpWitness{s.nodes[linear[a]].id, s.nodes[linear[b]].id, 0, "linear nodes differ by a y-constant"}};
      }
    }
  }
  return {true, std::nullopt};
}

bool is_nondegenerate(const std::vector<VecPoly>& q, const DirectionSet& directions) {
  for (std::size_t a = 0; a < q.size(); ++a) {
    for (std::size_t b = a + 1; b < q.size(); ++b) {
      for (const auto& c : coordinates(q[a] - q[b], directions)) {
        if (c.is_constant()) return false;
      }
    }
  }
  return true;
}

bool directions_independent(const DirectionSet& directions) {
  if (directions.empty()) return true;
  const std::size_t d = directions.front().size();
  if (directions.size() > d) return false;
  // Fraction-free elimination over the integers.
  std::vector<std::vector<mpz_class>> m;
  for (const auto& v : directions) {
    std::vector<mpz_class> row;
    for (auto x : v) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const mpz_class a = m[rank][col];
      const mpz_class b = m[r][col];
      for (std::size_t c = 0; c < d; ++c) m[r][c] = m[r][c] * a - m[rank][c] * b;
    }
    ++rank;
  }
  return rank == m.size();
}

ShiftPolySystem to_coordinate_basis(const ShiftPolySystem& s) {
  ShiftPolySystem out = s;
  out.directions.assign(s.dimension, std::vector<std::int64_t>(s.dimension, 0));
  for (int i = 0; i < s.dimension; ++i) out.directions[i][i] = 1;
  for (auto& n : out.nodes) n.poly = VecPoly(coordinates(n.poly, s.directions));
  return out;
}

ShiftPolySystem shift_system(const ShiftPolySystem& s, int alpha_star) {
  const VecPoly base = s.node(alpha_star).poly;
  ShiftPolySystem out = s;
  for (auto& n : out.nodes) n.poly -= base;
  return out;
}

ShiftPolySystem double_system(const ShiftPolySystem& s) {
  ShiftPolySystem out;
  out.dimension = s.dimension;
  out.directions = s.directions;
  out.parameters = s.parameters;
  const std::size_t t = s.parameters.size();
  out.parameters.push_back("h" + std::to_string(t + 1));
  out.parameters.push_back("h" + std::to_string(t + 2));
  const std::size_t nv = out.nvars();
  const std::size_t var1 = t + 1;
  const std::size_t var2 = t + 2;

  // Constancy in y is a property of the Z^d polynomial; basis components of a
  // constant node can still depend on y when the directions are dependent.
  const bool independent = directions_independent(s.directions);
  auto constant_in_y = [&](const VecPoly& p) {
    if (independent) return p.deg_y() == 0;
    for (const auto& c : coordinates(p, s.directions)) {
      if (c.deg_y() != 0) return false;
    }
    return true;
  };

  int next = s.next_free_id();
  std::optional<int> first_copy_of_distinguished;
  for (const auto& n : s.nodes) {
    VecPoly p = n.poly.extended(nv);
    if (constant_in_y(n.poly)) {
      Node kept = n;
      kept.poly = std::move(p);
      kept.active = false;
      kept.label = kMajorantLabel;
      kept.parent = n.id;
      kept.copy = 0;
      out.nodes.push_back(std::move(kept));
      continue;
    }
    for (int c = 1; c <= 2; ++c) {
      Node copy;
      copy.id = next++;
      copy.poly = p.substitute_y_shift(c == 1 ? var1 : var2);
      copy.active = n.active;
      copy.label = n.label;
      copy.parent = n.id;
      copy.copy = c;
      if (c == 1 && s.distinguished && *s.distinguished == n.id) first_copy_of_distinguished = copy.id;
      out.nodes.push_back(std::move(copy));
    }
  }
  if (s.distinguished) {
    // A distinguished node of y-degree 0 is kept verbatim under its own id.
    out.distinguished = first_copy_of_distinguished ? first_copy_of_distinguished : s.distinguished;
  }
  return out;
}

}  // namespace polyprimes::polysys
