#pragma once

// Number fields given by a defining polynomial: maximal order (Round 2),
// discriminant, signature, splitting of primes, tameness and conjugacy.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "traceform/factor.hpp"
#include "traceform/matrix.hpp"
#include "traceform/modp.hpp"
#include "traceform/poly.hpp"

namespace traceform {

struct NumberFieldOptions {
  FactorOptions factor;
  std::uint64_t seed = kDefaultSeed;
  int irreducibility_primes = 100;  // good primes tried for an irreducible reduction
  int pattern_primes = 25;          // good primes used for degree-pattern intersection
};

/// Splitting of a rational prime: (e, f) pairs sorted by (f, e).
struct PrimeSplit {
  Int p;
  std::vector<std::pair<unsigned, unsigned>> pairs;

  unsigned residue_degree_sum() const;
  bool unramified() const;
  std::string to_string() const;  // "[(e,f), ...]"
  friend bool operator==(const PrimeSplit& a, const PrimeSplit& b) {
    return a.p == b.p && a.pairs == b.pairs;
  }
};

struct MaximalOrder {
  RatMatrix basis;  // rows in power-basis coordinates, lower-triangular HNF, first row = 1
  Int disc;
  PrimeFactorization disc_factorization;
  Int index;
};

class NumberField {
 public:
  /// Builds the field of an irreducible integer polynomial (coefficients
  /// c0..cn). A non-monic input with leading coefficient a is replaced by
  /// the monic model a^{n-1} f(y / a).
  static NumberField from_poly(const IntVector& coeffs, const NumberFieldOptions& opts = {},
                               std::string label = {});
  static NumberField from_poly(const Poly& f, const NumberFieldOptions& opts = {},
                               std::string label = {});

  /// Rebuilds a field from previously computed data (used by the scan
  /// cache). Structural invariants are re-checked; maximality is trusted.
  static NumberField from_parts(const Poly& defining, const RatMatrix& basis, const Int& disc,
                                std::string label, const FactorOptions& factor = {});

  /// Same field with a different integral basis spanning the same order.
  NumberField with_basis(const RatMatrix& basis) const;

  const std::string& label() const noexcept { return label_; }
  const Poly& defining_poly() const noexcept { return defining_; }
  const Poly& min_poly() const noexcept { return min_poly_; }
  /// Leading coefficient a of the input; the monic root is a * theta.
  const Int& scale() const noexcept { return scale_; }
  int degree() const noexcept { return min_poly_.degree(); }
  const RatMatrix& integral_basis() const noexcept { return basis_; }
  const Int& disc() const noexcept { return disc_; }
  const PrimeFactorization& disc_factorization() const noexcept { return disc_factors_; }
  const Int& poly_disc() const noexcept { return poly_disc_; }
  const Int& index() const noexcept { return index_; }
  std::pair<int, int> signature() const noexcept { return {real_places_, complex_places_}; }
  bool totally_real() const noexcept { return complex_places_ == 0; }

  /// Product of elements given in integral-basis coordinates.
  IntVector multiply(const IntVector& a, const IntVector& b) const;
  /// Trace of an element given in integral-basis coordinates.
  Int trace(const IntVector& a) const;
  const IntVector& basis_traces() const noexcept { return basis_traces_; }
  /// Element as a polynomial in the monic root.
  Poly to_poly(const IntVector& coords) const;
  /// Coordinates of b_i * b_j in the integral basis.
  IntVector basis_product(std::size_t i, std::size_t j) const;

 private:
  NumberField() = default;
  void finish(const RatMatrix& basis, const FactorOptions& factor);

  std::string label_;
  Poly defining_;
  Poly min_poly_;
  Int scale_ = 1;
  RatMatrix basis_;
  Int disc_;
  PrimeFactorization disc_factors_;
  Int poly_disc_;
  Int index_ = 1;
  int real_places_ = 0;
  int complex_places_ = 0;
  std::vector<IntMatrix> structure_;  // structure_[i](j, k): b_i b_j = sum_k (.) b_k
  IntVector basis_traces_;
};

/// Monic integral model a^{n-1} f(y / a) of an integer polynomial.
Poly monic_model(const Poly& f);

/// Round 2: enlarge Z[theta] prime by prime at primes p with p^2 | disc(f).
MaximalOrder maximal_order(const Poly& monic_f, const FactorOptions& opts = {});

/// Irreducibility over Q. Returns normally when certified irreducible;
/// throws Reducible (with the exhibited factor) or IrreducibilityUndetermined.
void certify_irreducible(const Poly& f, const NumberFieldOptions& opts = {});

/// Dedekind splitting type; throws IndexObstruction when p divides the index.
PrimeSplit splitting_type(const NumberField& field, const Int& p, std::uint64_t seed = kDefaultSeed);

enum class Tameness { Unramified, Tame, Wild };
const char* to_string(Tameness t) noexcept;

Tameness is_tame_at(const NumberField& field, const Int& p);

/// Tame at every ramified prime?
Tameness tameness(const NumberField& field);

enum class FundamentalMode { QuadraticStyle, StrictSquarefree };

/// Squarefree d, or (quadratic style) d = 4m with m squarefree and m = 2, 3 mod 4.
bool is_fundamental_disc(const Int& d, FundamentalMode mode = FundamentalMode::QuadraticStyle,
                         const FactorOptions& opts = {});

struct ConjugacyOptions {
  std::uint32_t spectrum_bound = 10'000;       // primes compared for splitting types
  std::uint32_t split_prime_limit = 2'000'000;  // search range for a totally split prime
  std::size_t max_precision_bits = 1 << 16;
  std::uint64_t seed = kDefaultSeed;
};

struct ConjugacyResult {
  enum class Outcome { Yes, No, Undetermined };
  Outcome outcome = Outcome::Undetermined;
  std::string reason;
  /// Yes: image of the first field's monic root in the power basis of the second.
  std::optional<RatVector> witness;
  /// No via splitting types: the prime and both splittings.
  std::optional<PrimeSplit> split_first;
  std::optional<PrimeSplit> split_second;
};

const char* to_string(ConjugacyResult::Outcome o) noexcept;

ConjugacyResult are_conjugate(const NumberField& f, const NumberField& l, const ConjugacyOptions& opts = {});

}  // namespace traceform
