#include "traceform/exact.hpp"

#include <limits>

namespace traceform {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Reducible: return "reducible";
    case ErrorKind::IrreducibilityUndetermined: return "irreducibility-undetermined";
    case ErrorKind::FactorizationTimeout: return "factorization-timeout";
    case ErrorKind::NotSquarefree: return "not-squarefree";
    case ErrorKind::NotPositiveDefinite: return "not-positive-definite";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::IndexObstruction: return "index-obstruction";
    case ErrorKind::WildRamification: return "wild-ramification";
    case ErrorKind::SearchExhausted: return "search-exhausted";
    case ErrorKind::OutOfRange: return "out-of-range";
  }
  return "unknown";
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "valuation base < 2");
  Int m = n;
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rat& r, const Int& p) {
  return static_cast<int>(valuation(r.get_num(), p)) -
         static_cast<int>(valuation(r.get_den(), p));
}

std::uint64_t to_u64(const Int& n) {
  if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
    throw Error(ErrorKind::OutOfRange, "integer does not fit in 64 bits");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
  return v;
}

Int from_u64(std::uint64_t v) {
  Int n;
  mpz_import(n.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return n;
}

std::string to_string(const Int& n) { return n.get_str(); }
std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace traceform
