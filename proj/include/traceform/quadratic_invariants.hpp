#pragma once

// Local and rational invariants of quadratic forms (Hilbert symbols, Hasse
// invariants, Jordan decompositions) and the equivalence decision pipeline
// for trace forms of fields with a single tamely ramified prime.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "traceform/number_field.hpp"
#include "traceform/trace_forms.hpp"

namespace traceform {

/// A place of Q: a prime, or 0 for the real place.
using Place = Int;
inline const Place kRealPlace{0};

std::string place_name(const Place& v);

/// Hilbert symbol (a, b)_v for nonzero rationals.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/// Places where the Hilbert symbol (a, b) can be -1: the real place, 2 and
/// the primes dividing a numerator or denominator.
std::vector<Place> hilbert_support(const Rat& a, const Rat& b, const FactorOptions& opts = {});

struct LocalProfile {
  std::size_t dim = 0;
  Int disc_square_class;       // squarefree representative of det modulo squares
  std::pair<int, int> signature;
  std::map<Place, int> hasse;  // over {real, 2} and the primes of det; +1 elsewhere

  int hasse_at(const Place& v) const;
};

/// Hasse invariant prod_{i<j} (d_i, d_j)_v of a diagonalization. An integral
/// form is unimodular at every odd prime not dividing det, where the invariant
/// is +1, so only the real place, 2 and the primes of det are stored.
LocalProfile local_profile(const IntMatrix& gram, const FactorOptions& opts = {});
inline LocalProfile local_profile(const QuadLattice& l, const FactorOptions& opts = {}) {
  return local_profile(l.gram(), opts);
}

struct RationalComparison {
  bool equivalent = false;
  std::string reason;                                   // first difference, empty when equivalent
  std::map<Place, std::pair<int, int>> hasse_by_place;  // union of both supports
};

RationalComparison rationally_equivalent(const QuadLattice& a, const QuadLattice& b, const FactorOptions& opts = {});

/// Equal discriminants and rationally equivalent trace forms. Both fields must
/// be tame at every ramified prime (WildRamification).
bool same_genus_tame(const NumberField& f, const NumberField& l, const FactorOptions& opts = {});

struct JordanBlock {
  unsigned scale = 0;  // valuation of the scale
  unsigned dim = 0;
  int det_sign = 1;    // odd p: Legendre symbol of the unit part of the determinant
  // p = 2 only.
  unsigned det_mod8 = 1;  // unit part of the determinant, in {1, 3, 5, 7}
  bool odd_type = false;
  unsigned oddity = 0;    // trace of the odd diagonal part mod 8 (0 for even type)

  friend bool operator==(const JordanBlock&, const JordanBlock&) = default;
};

struct GenusSymbol {
  Int p;
  std::vector<JordanBlock> blocks;  // strictly increasing scale
  bool exact = true;                // false at p = 2 (no canonical form)

  std::string to_string() const;
};

GenusSymbol genus_symbol(const IntMatrix& gram, const Int& p);
inline GenusSymbol genus_symbol(const QuadLattice& l, const Int& p) { return genus_symbol(l.gram(), p); }

enum class GenusComparison { Same, Different, UndeterminedAt2 };
const char* to_string(GenusComparison c) noexcept;

GenusComparison same_genus(const QuadLattice& a, const QuadLattice& b, const FactorOptions& opts = {});

/// With m = n(n-1)/2: true iff no integer k >= 3 has k^m | d, i.e. no odd
/// prime p with v_p(d) >= m and v_2(d) < 2m.
bool watson_spinor_criterion(int n, const Int& d, const FactorOptions& opts = {});

struct ProofStep {
  std::string step;
  std::string criterion;
  bool holds = false;
  std::string detail;
};

struct EquivalenceVerdict {
  enum class Outcome { Equivalent, NotEquivalent, SameSpinorGenus, HypothesesNotMet, Undetermined };
  Outcome outcome = Outcome::Undetermined;
  std::vector<ProofStep> proof_trace;
  std::string reason;
};

const char* to_string(EquivalenceVerdict::Outcome o) noexcept;

/// Runs the hypotheses (equal degree >= 3, equal discriminant, a single tame
/// ramified prime, equal signature, not totally real) and then the proof
/// chain: Hasse invariants place by place, tame genus criterion, Watson's
/// spinor-genus criterion and Eichler's theorem for indefinite forms. Each
/// argued step is cross-checked against the computed invariants.
EquivalenceVerdict decide_theorem_general(const NumberField& f, const NumberField& l, const FactorOptions& opts = {});

}  // namespace traceform
