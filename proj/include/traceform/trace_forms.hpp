#pragma once

// Integral trace forms tr(xy) on the maximal order and on its trace-zero
// submodule, as integer Gram lattices.

#include <string>
#include <utility>
#include <vector>

#include "traceform/number_field.hpp"

namespace traceform {

enum class BasisKind { FullTrace, TraceZero, External };
const char* to_string(BasisKind kind) noexcept;

/// Symmetric integral Gram matrix with a cached determinant. Equality is
/// literal matrix equality, not isometry.
class QuadLattice {
 public:
  QuadLattice() = default;
  QuadLattice(IntMatrix gram, std::string label, BasisKind kind = BasisKind::External);

  const IntMatrix& gram() const noexcept { return gram_; }
  const std::string& label() const noexcept { return label_; }
  BasisKind kind() const noexcept { return kind_; }
  const Int& det() const noexcept { return det_; }
  std::size_t dim() const noexcept { return gram_.rows(); }

  friend bool operator==(const QuadLattice& a, const QuadLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  std::string label_;
  BasisKind kind_ = BasisKind::External;
  Int det_ = 1;
};

/// Gram matrix of tr(b_i b_j) over the field's integral basis.
QuadLattice trace_gram(const NumberField& field);

/// Basis of {x in O_K : tr(x) = 0} in integral-basis coordinates.
std::vector<IntVector> trace_zero_basis(const NumberField& field);

/// Trace form restricted to the trace-zero module. Degree must be at least 2.
QuadLattice trace_zero_gram(const NumberField& field);

/// (positive, negative) inertia; throws Degenerate for a singular form.
std::pair<int, int> form_signature(const IntMatrix& gram);
inline std::pair<int, int> form_signature(const QuadLattice& l) { return form_signature(l.gram()); }

struct GramReduction {
  IntMatrix reduced;  // entries in [0, m)
  bool is_zero = false;
};

GramReduction gram_mod(const IntMatrix& gram, const Int& m);
inline GramReduction gram_mod(const QuadLattice& l, const Int& m) { return gram_mod(l.gram(), m); }

}  // namespace traceform
