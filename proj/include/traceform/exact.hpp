#pragma once

// Exact scalar types and the error taxonomy shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace traceform {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

enum class ErrorKind {
  InvalidArgument,
  Parse,
  Reducible,
  IrreducibilityUndetermined,
  FactorizationTimeout,
  NotSquarefree,
  NotPositiveDefinite,
  Degenerate,
  IndexObstruction,
  WildRamification,
  SearchExhausted,
  OutOfRange,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Rational in lowest terms with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

/// Floor division, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Residue in [0, |m|).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Residue in (-m/2, m/2].
inline Int mod_centered(const Int& a, const Int& m) {
  Int r = mod_floor(a, m);
  if (2 * r > m) r -= m;
  return r;
}

inline Int floor_rat(const Rat& r) {
  return floor_div(r.get_num(), r.get_den());
}

/// Nearest integer, ties toward +infinity.
inline Int round_rat(const Rat& r) {
  Rat half(1, 2);
  Rat shifted = r + half;
  return floor_rat(shifted);
}

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline int sign(const Int& a) { return sgn(a); }
inline int sign(const Rat& a) { return sgn(a); }

/// p-adic valuation of a nonzero integer.
unsigned valuation(const Int& n, const Int& p);

/// Valuation of a nonzero rational (may be negative).
int valuation(const Rat& r, const Int& p);

/// Unsigned 64-bit view; throws OutOfRange if it does not fit.
std::uint64_t to_u64(const Int& n);
Int from_u64(std::uint64_t v);

std::string to_string(const Int& n);
std::string to_string(const Rat& r);

}  // namespace traceform
