#pragma once

// Factor search over Z for monic squarefree polynomials: factorization modulo
// a good prime, Hensel lifting above a coefficient bound and recombination of
// the lifted factors (Zassenhaus).

#include <cstdint>
#include <optional>
#include <vector>

#include "traceform/modp.hpp"
#include "traceform/poly.hpp"

namespace traceform {

/// Lifts f = prod factors (mod p, pairwise coprime, monic) to monic factors
/// modulo p^k. f must be monic with integer coefficients.
std::vector<IntVector> hensel_lift(const Poly& f, const std::vector<ModPoly>& factors, std::uint64_t p, unsigned k);

/// A nontrivial monic factor of f over Z of degree <= deg f / 2, or nullopt
/// when f is irreducible. Throws IrreducibilityUndetermined when f has more
/// than max_modular_factors factors modulo every prime tried.
std::optional<Poly> find_integer_factor(const Poly& monic_squarefree, std::uint64_t seed = kDefaultSeed,
                                        std::size_t max_modular_factors = 16);

}  // namespace traceform
