#pragma once

// Positive definite integral lattices: exact short vector enumeration,
// theta series slices and isometry testing by backtracking over images of
// a basis.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "traceform/trace_forms.hpp"

namespace traceform {

/// All leading principal minors positive.
bool is_positive_definite(const IntMatrix& gram);

struct ShortVector {
  IntVector coords;
  Int norm;
};

struct ShortVectorSet {
  Int bound;
  std::vector<ShortVector> vectors;  // one per +-pair, nonzero, norm <= bound
};

/// Fincke-Pohst enumeration with exact rational bounds. Throws
/// NotPositiveDefinite.
ShortVectorSet short_vectors(const IntMatrix& gram, const Int& bound);

/// r(m) for m = 1..max_norm, counting v and -v separately. Index 0 is r(1).
std::vector<Int> theta_slice(const IntMatrix& gram, long max_norm);

struct IsometryOptions {
  std::uint64_t max_nodes = 10'000'000;
};

struct IsometryResult {
  bool isometric = false;
  std::optional<IntMatrix> witness;  // U with U^T G1 U = G2, |det U| = 1
  std::string separating_invariant;  // set when not isometric
  std::uint64_t nodes = 0;
};

/// Throws NotPositiveDefinite, InvalidArgument (dimension mismatch) or
/// SearchExhausted when the node budget runs out.
IsometryResult is_isometric(const IntMatrix& g1, const IntMatrix& g2, const IsometryOptions& opts = {});
inline IsometryResult is_isometric(const QuadLattice& a, const QuadLattice& b, const IsometryOptions& opts = {}) {
  return is_isometric(a.gram(), b.gram(), opts);
}

/// Order of {U : U^T G U = G}.
std::uint64_t automorphism_count(const IntMatrix& gram, const IsometryOptions& opts = {});

struct BruteForceIsometry {
  bool found = false;  // false means none with entries in [-H, H]
  std::optional<IntMatrix> witness;
};

/// Exhaustive search over integer matrices with entries in [-height, height].
/// Limited to dimension <= 3 and height <= 5.
BruteForceIsometry brute_force_isometric(const IntMatrix& g1, const IntMatrix& g2, long height);

/// Pairwise size reduction b_i -= q b_j followed by sorting by norm.
/// Returns T with T^T G T reduced.
IntMatrix reduce_gram(const IntMatrix& gram);

}  // namespace traceform
