#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace polyprimes {

// A finite subset of Z^d inside [1, bound]^d. Either a product S^d of one
// axis set (a bitset over [0, bound]) or an explicit point list.
class LatticeSet {
 public:
  LatticeSet() = default;

  static LatticeSet product(int dimension, std::vector<bool> axis_members);
  static LatticeSet explicit_points(int dimension, std::vector<std::vector<std::int64_t>> points);

  int dimension() const noexcept { return dim_; }
  std::int64_t bound() const noexcept { return bound_; }
  bool is_product() const noexcept { return product_; }
  bool empty() const noexcept;

  bool contains(std::span<const std::int64_t> p) const;
  bool axis_contains(std::int64_t v) const noexcept {
    return v >= 0 && v <= bound_ && (*axis_)[static_cast<std::size_t>(v)];
  }

  // Sorted members of the axis set; product sets only.
  const std::vector<std::int64_t>& axis_list() const { return *axis_list_; }
  const std::vector<std::vector<std::int64_t>>& points() const { return points_; }

  // Number of points; saturates at INT64_MAX for huge products.
  std::int64_t count() const;

 private:
  struct PointHash {
    std::size_t operator()(const std::vector<std::int64_t>& p) const noexcept;
  };

  int dim_ = 0;
  std::int64_t bound_ = 0;
  bool product_ = true;
  std::shared_ptr<const std::vector<bool>> axis_;
  std::shared_ptr<const std::vector<std::int64_t>> axis_list_;
  std::vector<std::vector<std::int64_t>> points_;
  std::unordered_set<std::vector<std::int64_t>, PointHash> lookup_;
};

}  // namespace polyprimes
