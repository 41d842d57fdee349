#pragma once

// Polynomials over F_p for word-size primes, and their factorization
// (squarefree decomposition, distinct-degree, Cantor-Zassenhaus splitting).

#include <cstdint>
#include <vector>

#include "traceform/poly.hpp"

namespace traceform {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// Arithmetic in F_p for a prime p < 2^63.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce(const Int& a) const;
  std::uint64_t reduce(const Rat& a) const;

 private:
  std::uint64_t p_;
};

/// Coefficients c0..cn in [0, p), no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

namespace modp {

int degree(const ModPoly& a);
void trim(ModPoly& a);
ModPoly reduce(const Poly& f, const PrimeField& fp);
ModPoly add(const ModPoly& a, const ModPoly& b, const PrimeField& fp);
ModPoly sub(const ModPoly& a, const ModPoly& b, const PrimeField& fp);
ModPoly mul(const ModPoly& a, const ModPoly& b, const PrimeField& fp);
ModPoly rem(const ModPoly& a, const ModPoly& b, const PrimeField& fp);
ModPoly quo(const ModPoly& a, const ModPoly& b, const PrimeField& fp);
ModPoly derivative(const ModPoly& a, const PrimeField& fp);
ModPoly make_monic(const ModPoly& a, const PrimeField& fp);
ModPoly gcd(const ModPoly& a, const ModPoly& b, const PrimeField& fp);
ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, const PrimeField& fp);
/// base^e mod m.
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m, const PrimeField& fp);
std::uint64_t eval(const ModPoly& a, std::uint64_t x, const PrimeField& fp);
bool is_one(const ModPoly& a);

}  // namespace modp

struct ModFactor {
  ModPoly factor;  // monic irreducible over F_p
  unsigned multiplicity = 0;
};

/// Complete factorization over F_p. Factors are monic, sorted by
/// (degree, coefficients). Requires lc(f) to be a unit mod p and the
/// coefficient denominators to be prime to p.
std::vector<ModFactor> factor_mod_p(const Poly& f, const Int& p, std::uint64_t seed = kDefaultSeed);

/// Irreducibility over F_p via gcd(f, x^{p^k} - x) for k <= deg/2.
bool is_irreducible_mod_p(const ModPoly& f, const PrimeField& fp);

}  // namespace traceform
