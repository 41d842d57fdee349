#pragma once

// Reference example fields and the data printed alongside them. Used by the
// verify-paper command and by the test suites.

#include <string>
#include <vector>

#include "traceform/matrix.hpp"
#include "traceform/poly.hpp"

namespace traceform::reference {

struct FieldFamily {
  std::string name;
  std::vector<Poly> polys;
  Int disc;  // common field discriminant
};

/// x^8 + 15 and x^8 + 240 (arithmetically equivalent, non-conjugate).
Poly octic_first();
Poly octic_second();
/// Pinned integral bases, rows in power-basis coordinates.
RatMatrix octic_first_basis();
RatMatrix octic_second_basis();
/// Printed trace Gram matrices in those bases.
IntMatrix octic_first_gram();
IntMatrix octic_second_gram();
Int octic_disc();

FieldFamily cubic_quadruple();   // disc -3299
FieldFamily quartic_pair();      // disc 7537
/// x^4 + 4x^2 - 5x + 2 as printed next to the quartic pair. Its
/// discriminant is the prime 7573, so quartic_pair() uses x^4 + 5x^2 - x + 4
/// (discriminant 7537, signature (0, 2), not conjugate to the first) instead.
Poly quartic_printed_second();
FieldFamily quintic_pair();      // disc 34129
FieldFamily septic_pair();       // disc 2741^2
FieldFamily spinor_triple();     // non-monic totally real quartics, disc 151717
/// 16x^4 - 23x^2 - 18x + 1 as printed in the triple. It has a negative
/// discriminant (-2^11 3^2 37579), so it is not totally real; spinor_triple()
/// uses 16x^4 - 23x^3 - 18x^2 + 1 (discriminant 151717) instead.
Poly spinor_printed_second();

/// Prime at which the septic pair is told apart by splitting type.
inline constexpr long kSepticPrime = 2741;

}  // namespace traceform::reference
