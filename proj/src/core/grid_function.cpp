#include "polyprimes/grid_function.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "polyprimes/error.hpp"

namespace polyprimes {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NoNonlinearNode: return "NoNonlinearNode";
    case Errc::GeneralPositionViolated: return "GeneralPositionViolated";
    case Errc::WeightNotDecreasing: return "WeightNotDecreasing";
    case Errc::IterationCapExceeded: return "IterationCapExceeded";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::DegenerateSystem: return "DegenerateSystem";
    case Errc::LimitTooSmall: return "LimitTooSmall";
    case Errc::InvalidEpsilon: return "InvalidEpsilon";
    case Errc::EmptyIntersection: return "EmptyIntersection";
    case Errc::FactorizationRangeExceeded: return "FactorizationRangeExceeded";
    case Errc::ShiftOutOfRange: return "ShiftOutOfRange";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::IncompleteFamily: return "IncompleteFamily";
    case Errc::RangeTooShort: return "RangeTooShort";
    case Errc::MajorantViolated: return "MajorantViolated";
    case Errc::CertificateMismatch: return "CertificateMismatch";
    case Errc::OutOfRangeFunction: return "OutOfRangeFunction";
    case Errc::TargetTooLarge: return "TargetTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::size_t grid_size(int dimension, std::int64_t modulus) {
  if (dimension < 1 || modulus < 1) {
    fail(Errc::DimensionMismatch, "grid needs d >= 1 and N >= 1");
  }
  std::size_t n = 1;
  for (int i = 0; i < dimension; ++i) {
    if (n > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(modulus)) {
      fail(Errc::TargetTooLarge, "grid of size N^d overflows");
    }
    n *= static_cast<std::size_t>(modulus);
  }
  return n;
}

GridFunction::GridFunction(int dimension, std::int64_t modulus, double fill)
    : dim_(dimension), modulus_(modulus), values_(grid_size(dimension, modulus), fill) {}

GridFunction::GridFunction(int dimension, std::int64_t modulus, std::vector<double> values)
    : dim_(dimension), modulus_(modulus), values_(std::move(values)) {
  if (values_.size() != grid_size(dimension, modulus)) {
    fail(Errc::DimensionMismatch, "grid payload has " + std::to_string(values_.size()) +
                                      " values, expected N^d");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) fail(Errc::InvalidArgument, "grid values must be finite");
  }
}

std::size_t GridFunction::index_of(std::span<const std::int64_t> point) const {
  if (static_cast<int>(point.size()) != dim_) {
    fail(Errc::DimensionMismatch, "point dimension does not match grid");
  }
  std::size_t idx = 0;
  for (std::int64_t c : point) {
    idx = idx * static_cast<std::size_t>(modulus_) + static_cast<std::size_t>(mod_floor(c, modulus_));
  }
  return idx;
}

std::vector<std::int64_t> GridFunction::point_of(std::size_t index) const {
  std::vector<std::int64_t> p(dim_);
  for (int i = dim_ - 1; i >= 0; --i) {
    p[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(modulus_));
    index /= static_cast<std::size_t>(modulus_);
  }
  return p;
}

double GridFunction::mean() const {
  if (values_.empty()) return 0.0;
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace polyprimes
