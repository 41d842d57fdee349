#include "traceform/modp.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace traceform {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (std::uint64_t{1} << 63))
    throw Error(ErrorKind::OutOfRange, "prime field modulus must lie in [2, 2^63)");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero in F_p");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const Int& a) const {
  Int r = mod_floor(a, from_u64(p_));
  return to_u64(r);
}

std::uint64_t PrimeField::reduce(const Rat& a) const {
  std::uint64_t den = reduce(a.get_den());
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "denominator divisible by p");
  return mul(reduce(a.get_num()), inv(den));
}

namespace modp {

int degree(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool is_one(const ModPoly& a) { return a.size() == 1 && a[0] == 1; }

ModPoly reduce(const Poly& f, const PrimeField& fp) {
  ModPoly out;
  for (const auto& c : f.coeffs()) out.push_back(fp.reduce(c));
  trim(out);
  return out;
}

ModPoly add(const ModPoly& a, const ModPoly& b, const PrimeField& fp) {
  ModPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = fp.add(c[i], b[i]);
  trim(c);
  return c;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, const PrimeField& fp) {
  ModPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = fp.sub(c[i], b[i]);
  trim(c);
  return c;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, const PrimeField& fp) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = fp.add(c[i + j], fp.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

namespace {

void divide(const ModPoly& a, const ModPoly& b, const PrimeField& fp, ModPoly* q, ModPoly* r) {
  if (b.empty()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial mod p");
  ModPoly rem = a;
  const int db = degree(b);
  const std::uint64_t inv_lead = fp.inv(b.back());
  ModPoly quo;
  if (degree(a) >= db) quo.assign(static_cast<std::size_t>(degree(a) - db) + 1, 0);
  for (int k = degree(rem); k >= db; --k) {
    std::uint64_t c = fp.mul(rem[static_cast<std::size_t>(k)], inv_lead);
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(k - db + j);
      rem[idx] = fp.sub(rem[idx], fp.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  if (static_cast<int>(rem.size()) > db) rem.resize(static_cast<std::size_t>(std::max(db, 0)));
  trim(rem);
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

}  // namespace

ModPoly rem(const ModPoly& a, const ModPoly& b, const PrimeField& fp) {
  ModPoly r;
  divide(a, b, fp, nullptr, &r);
  return r;
}

ModPoly quo(const ModPoly& a, const ModPoly& b, const PrimeField& fp) {
  ModPoly q;
  divide(a, b, fp, &q, nullptr);
  return q;
}

ModPoly derivative(const ModPoly& a, const PrimeField& fp) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = fp.mul(a[i], i % fp.p());
  trim(d);
  return d;
}

ModPoly make_monic(const ModPoly& a, const PrimeField& fp) {
  if (a.empty()) return a;
  std::uint64_t inv = fp.inv(a.back());
  ModPoly c = a;
  for (auto& x : c) x = fp.mul(x, inv);
  return c;
}

ModPoly gcd(const ModPoly& a, const ModPoly& b, const PrimeField& fp) {
  ModPoly x = a, y = b;
  while (!y.empty()) {
    ModPoly r = rem(x, y, fp);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x, fp);
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, const PrimeField& fp) {
  return rem(mul(a, b, fp), m, fp);
}

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m, const PrimeField& fp) {
  ModPoly result{1};
  result = rem(result, m, fp);
  ModPoly b = rem(base, m, fp);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m, fp);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m, fp);
  }
  return result;
}

std::uint64_t eval(const ModPoly& a, std::uint64_t x, const PrimeField& fp) {
  std::uint64_t acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = fp.add(fp.mul(acc, x), *it);
  return acc;
}

}  // namespace modp

namespace {

using modp::degree;

// p-th root of a polynomial in x^p over F_p (coefficients are fixed by
// Frobenius).
ModPoly pth_root(const ModPoly& f, std::uint64_t p) {
  ModPoly r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
  modp::trim(r);
  return r;
}

void squarefree_decomposition(const ModPoly& f, unsigned scale, const PrimeField& fp,
                              std::vector<std::pair<ModPoly, unsigned>>& out) {
  if (degree(f) < 1) return;
  ModPoly d = modp::derivative(f, fp);
  if (d.empty()) {
    squarefree_decomposition(pth_root(f, fp.p()), scale * static_cast<unsigned>(fp.p()), fp, out);
    return;
  }
  ModPoly c = modp::gcd(f, d, fp);
  ModPoly w = modp::quo(f, c, fp);
  unsigned i = 1;
  while (degree(w) > 0) {
    ModPoly y = modp::gcd(w, c, fp);
    ModPoly z = modp::quo(w, y, fp);
    if (degree(z) > 0) out.emplace_back(modp::make_monic(z, fp), i * scale);
    ++i;
    w = std::move(y);
    c = modp::quo(c, w, fp);
  }
  if (degree(c) > 0)
    squarefree_decomposition(pth_root(c, fp.p()), scale * static_cast<unsigned>(fp.p()), fp, out);
}

// Squarefree monic f -> (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f, const PrimeField& fp) {
  std::vector<std::pair<ModPoly, int>> out;
  const Int p = from_u64(fp.p());
  ModPoly x{0, 1};
  ModPoly h = modp::rem(x, f, fp);
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = modp::powmod(h, p, f, fp);
    ModPoly g = modp::gcd(modp::sub(h, x, fp), f, fp);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = modp::quo(f, g, fp);
      h = modp::rem(h, f, fp);
    }
  }
  if (degree(f) > 0) out.emplace_back(modp::make_monic(f, fp), degree(f));
  return out;
}

void equal_degree(const ModPoly& f, int d, const PrimeField& fp, std::mt19937_64& rng,
                  std::vector<ModPoly>& out) {
  const int n = degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = fp.p();
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  Int exponent;
  if (p != 2) {
    Int q = ipow(from_u64(p), static_cast<unsigned long>(d));
    exponent = (q - 1) / 2;
  }
  for (;;) {
    ModPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    modp::trim(a);
    if (degree(a) < 1) continue;
    ModPoly g = modp::gcd(a, f, fp);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, fp, rng, out);
      equal_degree(modp::quo(f, g, fp), d, fp, rng, out);
      return;
    }
    ModPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^{2^{d-1}}.
      ModPoly t = a, acc = a;
      for (int i = 1; i < d; ++i) {
        t = modp::mulmod(t, t, f, fp);
        acc = modp::add(acc, t, fp);
      }
      b = acc;
    } else {
      b = modp::sub(modp::powmod(a, exponent, f, fp), ModPoly{1}, fp);
    }
    g = modp::gcd(b, f, fp);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, fp, rng, out);
      equal_degree(modp::quo(f, g, fp), d, fp, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible_mod_p(const ModPoly& f, const PrimeField& fp) {
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  ModPoly m = modp::make_monic(f, fp);
  if (degree(modp::gcd(m, modp::derivative(m, fp), fp)) > 0) return false;
  const Int p = from_u64(fp.p());
  ModPoly x{0, 1};
  ModPoly h = modp::rem(x, m, fp);
  for (int k = 1; 2 * k <= n; ++k) {
    h = modp::powmod(h, p, m, fp);
    if (degree(modp::gcd(modp::sub(h, x, fp), m, fp)) > 0) return false;
  }
  return true;
}

std::vector<ModFactor> factor_mod_p(const Poly& f, const Int& p, std::uint64_t seed) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  PrimeField fp(to_u64(p));
  ModPoly g = modp::reduce(f, fp);
  if (degree(g) != f.degree())
    throw Error(ErrorKind::InvalidArgument, "leading coefficient vanishes mod p");
  g = modp::make_monic(g, fp);
  std::vector<std::pair<ModPoly, unsigned>> sqf;
  squarefree_decomposition(g, 1, fp, sqf);
  std::mt19937_64 rng(seed);
  std::map<ModPoly, unsigned> merged;
  for (const auto& [part, mult] : sqf)
    for (const auto& [block, d] : distinct_degree(part, fp)) {
      std::vector<ModPoly> irreducibles;
      equal_degree(block, d, fp, rng, irreducibles);
      for (auto& q : irreducibles) merged[modp::make_monic(q, fp)] += mult;
    }
  std::vector<ModFactor> out;
  for (auto& [q, m] : merged) out.push_back({q, m});
  std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
    return a.factor < b.factor;
  });
  return out;
}

}  // namespace traceform
