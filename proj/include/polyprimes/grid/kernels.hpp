#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polyprimes/grid_function.hpp"

namespace polyprimes::grid {

// One factor f(x + offset) of a shifted product; offset is reduced mod N.
struct Term {
  const GridFunction* f = nullptr;
  std::vector<std::int64_t> offset;
};

// Both namespaces sum each x_1 row first, then the rows in order, so their
// results agree bit for bit.
namespace serial {
// E_x prod_k f_k(x + o_k).
double product_mean(std::span<const Term> terms);
// out(x) += weight * prod_k f_k(x + o_k).
void product_accumulate(std::span<const Term> terms, double weight, GridFunction& out);
}  // namespace serial

namespace parallel {
double product_mean(std::span<const Term> terms);
void product_accumulate(std::span<const Term> terms, double weight, GridFunction& out);
}  // namespace parallel

enum class Exec { Serial, Parallel };

double product_mean(std::span<const Term> terms, Exec exec);
void product_accumulate(std::span<const Term> terms, double weight, GridFunction& out, Exec exec);

// Throws DimensionMismatch unless every term lives on the grid of `like`
// and carries a d-long offset.
void check_terms(std::span<const Term> terms, const GridFunction& like);

}  // namespace polyprimes::grid
