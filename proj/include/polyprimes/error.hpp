#pragma once

#include <stdexcept>
#include <string>

namespace polyprimes {

// Every module reports failures through one exception type carrying a
// machine-readable kind; the CLI maps kinds to exit codes.
enum class Errc {
  // polysys
  ZeroPolynomial,
  UnknownNode,
  ShapeMismatch,
  NoNonlinearNode,
  GeneralPositionViolated,
  WeightNotDecreasing,
  IterationCapExceeded,
  ArityMismatch,
  DegenerateSystem,
  // sieve
  LimitTooSmall,
  InvalidEpsilon,
  EmptyIntersection,
  FactorizationRangeExceeded,
  ShiftOutOfRange,
  // grid
  DimensionMismatch,
  BudgetExceeded,
  IncompleteFamily,
  RangeTooShort,
  MajorantViolated,
  CertificateMismatch,
  OutOfRangeFunction,
  // search
  TargetTooLarge,
  // io / cli
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace polyprimes
