#include "traceform/factor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace traceform {

Int PrimeFactorization::value() const {
  Int v = sign;
  for (const auto& [p, e] : factors) v *= ipow(p, e);
  return v;
}

std::vector<Int> PrimeFactorization::primes() const {
  std::vector<Int> out;
  for (const auto& [p, e] : factors) out.push_back(p);
  return out;
}

unsigned PrimeFactorization::exponent_of(const Int& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

std::string PrimeFactorization::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << "-1";
  bool first = sign > 0;
  for (const auto& [p, e] : factors) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  if (first) os << "1";
  return os.str();
}

const Int& primality_limit() {
  static const Int limit("3300000000000000000000000");
  return limit;
}

const std::vector<std::uint32_t>& primes_up_to(std::uint32_t limit) {
  static std::mutex mu;
  static std::vector<std::uint32_t> primes;
  static std::uint32_t sieved = 0;
  std::lock_guard<std::mutex> lock(mu);
  if (limit > sieved) {
    std::uint32_t n = std::max(limit, 2u * sieved);
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    primes.clear();
    for (std::uint64_t i = 2; i <= n; ++i) {
      if (composite[i]) continue;
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    sieved = n;
  }
  static thread_local std::vector<std::uint32_t> view;
  view.assign(primes.begin(), std::upper_bound(primes.begin(), primes.end(), limit));
  return view;
}

std::uint64_t next_prime(std::uint64_t n) {
  for (std::uint64_t c = n + 1;; ++c)
    if (is_prime(from_u64(c))) return c;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n >= primality_limit())
    throw Error(ErrorKind::OutOfRange, "primality certification limited to n < 3.3e24");
  Int d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  Int nm1 = n - 1;
  Int x;
  for (unsigned a : small) {
    Int base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 when the
// iteration budget runs out.
Int brent_rho(const Int& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; budget > 0; ++c) {
    Int y = 2, x, ys, q = 1, g = 1;
    const Int cc = c;
    auto f = [&](const Int& v) {
      Int r = v * v + cc;
      return Int(r % n);
    };
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          Int diff = abs(x - y);
          q = q * diff % n;
        }
        budget = budget > lim ? budget - lim : 0;
        g = gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      do {
        ys = f(ys);
        g = gcd(Int(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

void split(const Int& n, std::map<Int, unsigned>& out, std::uint64_t& budget) {
  if (n == 1) return;
  if (n < primality_limit() && is_prime(n)) {
    out[n] += 1;
    return;
  }
  if (is_perfect_square(n)) {
    Int r = isqrt(n);
    std::map<Int, unsigned> sub;
    split(r, sub, budget);
    for (const auto& [p, e] : sub) out[p] += 2 * e;
    return;
  }
  Int d = brent_rho(n, budget);
  if (d == 0)
    throw Error(ErrorKind::FactorizationTimeout, "Pollard rho budget exhausted on " + n.get_str());
  Int other = n / d;
  split(d, out, budget);
  split(other, out, budget);
}

}  // namespace

PrimeFactorization factor_integer(const Int& n, const FactorOptions& opts) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cannot factor zero");
  PrimeFactorization pf;
  pf.sign = n < 0 ? -1 : 1;
  Int m = abs(n);
  std::map<Int, unsigned> found;
  const auto bound = static_cast<std::uint32_t>(std::min<std::uint64_t>(opts.trial_bound, 100'000'000));
  for (std::uint32_t p : primes_up_to(bound)) {
    if (m == 1) break;
    Int pp = p;
    if (pp * pp > m) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) found[pp] = e;
  }
  if (m > 1) {
    Int b = bound;
    if (b * b > m) {
      found[m] += 1;
    } else {
      std::uint64_t budget = opts.max_rho_iterations;
      split(m, found, budget);
    }
  }
  for (const auto& [p, e] : found) pf.factors.emplace_back(p, e);
  return pf;
}

Int squarefree_part(const Int& n, const FactorOptions& opts) {
  PrimeFactorization pf = factor_integer(n, opts);
  Int r = pf.sign;
  for (const auto& [p, e] : pf.factors)
    if (e % 2 == 1) r *= p;
  return r;
}

}  // namespace traceform
