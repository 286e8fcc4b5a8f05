#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polyprimes {

// A real-valued function on X = (Z/NZ)^d stored densely in row-major order.
// Coordinate x_1 is the slowest index. Integer points are reduced mod N, so
// the natural-number point x in [1, N] lives at index x mod N.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(int dimension, std::int64_t modulus, double fill = 0.0);
  GridFunction(int dimension, std::int64_t modulus, std::vector<double> values);

  int dimension() const noexcept { return dim_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  double& operator[](std::size_t i) noexcept { return values_[i]; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  // Reduces each coordinate mod N before indexing.
  std::size_t index_of(std::span<const std::int64_t> point) const;
  std::vector<std::int64_t> point_of(std::size_t index) const;
  double at(std::span<const std::int64_t> point) const { return values_[index_of(point)]; }

  double mean() const;
  double max_abs() const;
  bool same_shape(const GridFunction& other) const noexcept {
    return dim_ == other.dim_ && modulus_ == other.modulus_;
  }

 private:
  int dim_ = 0;
  std::int64_t modulus_ = 0;
  std::vector<double> values_;
};

std::size_t grid_size(int dimension, std::int64_t modulus);

inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace polyprimes
