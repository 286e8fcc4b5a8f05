#include "polyprimes/lattice_set.hpp"

#include <algorithm>
#include <limits>

#include "polyprimes/error.hpp"

namespace polyprimes {

LatticeSet LatticeSet::product(int dimension, std::vector<bool> axis_members) {
  if (dimension < 1) fail(Errc::InvalidArgument, "lattice set dimension must be >= 1");
  LatticeSet s;
  s.dim_ = dimension;
  s.product_ = true;
  s.bound_ = axis_members.empty() ? 0 : static_cast<std::int64_t>(axis_members.size()) - 1;
  std::vector<std::int64_t> list;
  for (std::size_t v = 1; v < axis_members.size(); ++v) {
    if (axis_members[v]) list.push_back(static_cast<std::int64_t>(v));
  }
  if (!axis_members.empty()) axis_members[0] = false;
  s.axis_ = std::make_shared<const std::vector<bool>>(std::move(axis_members));
  s.axis_list_ = std::make_shared<const std::vector<std::int64_t>>(std::move(list));
  return s;
}

LatticeSet LatticeSet::explicit_points(int dimension, std::vector<std::vector<std::int64_t>> points) {
  if (dimension < 1) fail(Errc::InvalidArgument, "lattice set dimension must be >= 1");
  LatticeSet s;
  s.dim_ = dimension;
  s.product_ = false;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dimension) {
      fail(Errc::DimensionMismatch, "point of length " + std::to_string(p.size()) + " in a set of dimension " +
                                        std::to_string(dimension));
    }
    for (auto v : p) {
      if (v < 1) fail(Errc::InvalidArgument, "set members must have positive coordinates");
      s.bound_ = std::max(s.bound_, v);
    }
  }
  s.lookup_.reserve(points.size());
  for (const auto& p : points) s.lookup_.insert(p);
  s.points_ = std::move(points);
  return s;
}

bool LatticeSet::empty() const noexcept {
  return product_ ? (!axis_list_ || axis_list_->empty()) : points_.empty();
}

bool LatticeSet::contains(std::span<const std::int64_t> p) const {
  if (static_cast<int>(p.size()) != dim_) return false;
  if (product_) {
    return std::all_of(p.begin(), p.end(), [&](std::int64_t v) { return axis_contains(v); });
  }
  return lookup_.count(std::vector<std::int64_t>(p.begin(), p.end())) != 0;
}

std::int64_t LatticeSet::count() const {
  if (!product_) return static_cast<std::int64_t>(points_.size());
  const auto k = static_cast<std::int64_t>(axis_list_ ? axis_list_->size() : 0);
  std::int64_t c = 1;
  for (int i = 0; i < dim_; ++i) {
    if (k != 0 && c > std::numeric_limits<std::int64_t>::max() / k) return std::numeric_limits<std::int64_t>::max();
    c *= k;
  }
  return c;
}

std::size_t LatticeSet::PointHash::operator()(const std::vector<std::int64_t>& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto v : p) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

}  // namespace polyprimes
