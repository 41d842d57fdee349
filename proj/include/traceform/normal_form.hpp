#pragma once

// Hermite and Smith normal forms over Z, and saturated integer kernels.

#include <vector>

#include "traceform/matrix.hpp"

namespace traceform {

struct HnfResult {
  IntMatrix h;  // row Hermite normal form, zero rows last
  IntMatrix u;  // unimodular, h = u * m
  std::size_t rank = 0;
};

/// Row Hermite normal form. Pivots are positive and entries above a pivot
/// lie in [0, pivot). Pivot selection takes the row of smallest |entry|.
HnfResult hnf(const IntMatrix& m);

/// Basis of {v : m v = 0}, returned as the rows of its Hermite normal form.
/// The basis spans a direct summand of Z^cols.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

struct SmithResult {
  IntMatrix d;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix u;
  IntMatrix v;  // d = u * m * v
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Nonzero elementary divisors in divisibility order.
std::vector<Int> elementary_divisors(const IntMatrix& m);

/// HNF of the rows, with zero rows dropped.
IntMatrix row_basis(const IntMatrix& m);

}  // namespace traceform
