#pragma once

// Univariate polynomials with exact rational coefficients.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "traceform/exact.hpp"

namespace traceform {

class Poly {
 public:
  Poly() = default;
  /// Coefficients c0, c1, ..., cn (trailing zeros are dropped).
  explicit Poly(std::vector<Rat> coeffs);

  static Poly from_ints(const std::vector<long>& coeffs);
  static Poly from_ints(std::initializer_list<long> coeffs) {
    return from_ints(std::vector<long>(coeffs));
  }
  static Poly from_ints(const IntVector& coeffs);
  static Poly monomial(const Rat& c, int degree);
  static Poly constant(const Rat& c) { return monomial(c, 0); }
  static Poly x() { return monomial(Rat(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Coefficient of x^i (zero outside the support).
  Rat coeff(int i) const;
  const Rat& lead() const;
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }

  bool is_integral() const;
  bool is_monic() const { return !is_zero() && lead() == 1; }
  /// Integer coefficients; throws if some coefficient is not integral.
  IntVector int_coeffs() const;

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

PolyDivision divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Resultant computed by the subresultant PRS on integral multiples.
Rat resultant(const Poly& f, const Poly& g);

/// (-1)^{n(n-1)/2} res(f, f') / lc(f). Throws for constant f.
Rat poly_discriminant(const Poly& f);

/// Number of distinct real roots of a squarefree polynomial, counted with
/// Sturm sequence sign changes at +-infinity. Throws NotSquarefree.
int sturm_real_roots(const Poly& f);

/// Exact rational roots of a polynomial with rational coefficients.
std::vector<Rat> rational_roots(const Poly& f);

}  // namespace traceform
