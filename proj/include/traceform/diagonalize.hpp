#pragma once

#include "traceform/matrix.hpp"

namespace traceform {

struct Diagonalization {
  RatVector diagonal;   // in elimination order
  RatMatrix transform;  // T with T^T G T = diag(diagonal)
  bool degenerate = false;
};

/// Congruence diagonalization over Q by symmetric Gaussian elimination.
/// A zero pivot G_ii with some G_ij != 0 is repaired with e_i <- e_i + e_j
/// (or e_i - e_j if that still gives zero).
Diagonalization diagonalize_symmetric(const RatMatrix& g);
Diagonalization diagonalize_symmetric(const IntMatrix& g);

}  // namespace traceform
