#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "traceform/exact.hpp"

namespace traceform {

struct PrimeFactorization {
  int sign = 1;
  std::vector<std::pair<Int, unsigned>> factors;  // strictly increasing primes

  Int value() const;
  std::vector<Int> primes() const;
  unsigned exponent_of(const Int& p) const;
  bool is_prime_power() const { return factors.size() == 1; }
  std::string to_string() const;  // e.g. "-1 * 3299" or "2^10 * 3^7 * 5^7"
};

struct FactorOptions {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t max_rho_iterations = 100'000'000;
};

/// Deterministic Miller-Rabin with witnesses {2, ..., 37}; exact below
/// 3.3e24. Larger inputs throw OutOfRange.
bool is_prime(const Int& n);

/// Upper limit for certified primality.
const Int& primality_limit();

/// Complete factorization of n != 0: trial division, then Pollard rho with
/// Brent cycle detection. Throws FactorizationTimeout when the rho budget is
/// spent on a composite cofactor (or a cofactor is beyond the certified range).
PrimeFactorization factor_integer(const Int& n, const FactorOptions& opts = {});

/// Squarefree integer in the same rational square class as n != 0.
Int squarefree_part(const Int& n, const FactorOptions& opts = {});

/// All primes <= limit, ascending.
const std::vector<std::uint32_t>& primes_up_to(std::uint32_t limit);

/// Smallest prime strictly greater than n (n small).
std::uint64_t next_prime(std::uint64_t n);

}  // namespace traceform
