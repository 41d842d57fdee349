#include "traceform/hensel.hpp"

#include <algorithm>

#include "traceform/factor.hpp"

namespace traceform {

namespace {

// Integer polynomials as coefficient vectors c0..cn.
IntVector zmul(const IntVector& a, const IntVector& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  IntVector out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  for (auto& x : out) x = mod_floor(x, m);
  return out;
}

IntVector from_mod(const ModPoly& a) { return IntVector(a.begin(), a.end()); }

ModPoly to_mod(const IntVector& a, const PrimeField& fp) {
  ModPoly out;
  for (const auto& x : a) out.push_back(fp.reduce(x));
  modp::trim(out);
  return out;
}

// s, t with s a + t b = 1 over F_p for coprime a, b.
std::pair<ModPoly, ModPoly> ext_gcd(const ModPoly& a, const ModPoly& b, const PrimeField& fp) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q = modp::quo(r0, r1, fp);
    ModPoly r2 = modp::sub(r0, modp::mul(q, r1, fp), fp);
    ModPoly s2 = modp::sub(s0, modp::mul(q, s1, fp), fp);
    ModPoly t2 = modp::sub(t0, modp::mul(q, t1, fp), fp);
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (modp::degree(r0) != 0) throw Error(ErrorKind::InvalidArgument, "modular factors are not coprime");
  std::uint64_t inv = fp.inv(r0[0]);
  for (auto& x : s0) x = fp.mul(x, inv);
  for (auto& x : t0) x = fp.mul(x, inv);
  return {s0, t0};
}

// Lifts f = g h (mod p) with g, h monic to f = G H (mod p^k).
std::pair<IntVector, IntVector> lift_pair(const IntVector& f, const ModPoly& g, const ModPoly& h, std::uint64_t p,
                                          unsigned k) {
  PrimeField fp(p);
  auto [s, t] = ext_gcd(g, h, fp);
  Int pk = ipow(Int(p), k), pj(p);
  IntVector bigg = from_mod(g), bigh = from_mod(h);
  for (unsigned j = 1; j < k; ++j, pj *= p) {
    IntVector prod = zmul(bigg, bigh, pk);
    IntVector err(std::max(f.size(), prod.size()));
    for (std::size_t i = 0; i < err.size(); ++i) {
      Int d = (i < f.size() ? f[i] : Int(0)) - (i < prod.size() ? prod[i] : Int(0));
      err[i] = mod_floor(d, pk) / pj;
    }
    ModPoly e = to_mod(err, fp);
    ModPoly et = modp::mul(e, t, fp);
    ModPoly q = modp::quo(et, g, fp), r = modp::rem(et, g, fp);
    ModPoly dh = modp::add(modp::mul(e, s, fp), modp::mul(q, h, fp), fp);
    for (std::size_t i = 0; i < r.size(); ++i) bigg[i] = mod_floor(bigg[i] + pj * r[i], pk);
    for (std::size_t i = 0; i < dh.size(); ++i) bigh[i] = mod_floor(bigh[i] + pj * dh[i], pk);
  }
  return {bigg, bigh};
}

}  // namespace

std::vector<IntVector> hensel_lift(const Poly& f, const std::vector<ModPoly>& factors, std::uint64_t p, unsigned k) {
  if (!f.is_monic() || !f.is_integral()) throw Error(ErrorKind::InvalidArgument, "hensel_lift needs a monic integer polynomial");
  PrimeField fp(p);
  Int pk = ipow(Int(p), k);
  IntVector rest = f.int_coeffs();
  for (auto& x : rest) x = mod_floor(x, pk);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    ModPoly cofactor{1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) cofactor = modp::mul(cofactor, factors[j], fp);
    auto [g, h] = lift_pair(rest, factors[i], cofactor, p, k);
    out.push_back(std::move(g));
    rest = std::move(h);
  }
  out.push_back(rest);
  return out;
}

std::optional<Poly> find_integer_factor(const Poly& f, std::uint64_t seed, std::size_t max_modular_factors) {
  if (!f.is_monic() || !f.is_integral()) throw Error(ErrorKind::InvalidArgument, "need a monic integer polynomial");
  const int n = f.degree();
  if (n <= 1) return std::nullopt;
  const Int disc = poly_discriminant(f).get_num();
  if (disc == 0) throw Error(ErrorKind::NotSquarefree, "polynomial is not squarefree");

  // Fewest modular factors among a handful of good primes.
  std::uint64_t best_p = 0;
  std::vector<ModFactor> best;
  int good = 0;
  for (std::uint32_t q : primes_up_to(10000)) {
    if (good == 8) break;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), q)) continue;
    ++good;
    auto facs = factor_mod_p(f, Int(q), seed);
    if (facs.size() == 1) return std::nullopt;
    if (best_p == 0 || facs.size() < best.size()) best_p = q, best = std::move(facs);
  }
  if (best_p == 0) throw Error(ErrorKind::IrreducibilityUndetermined, "no good prime below 10000");
  if (best.size() > max_modular_factors)
    throw Error(ErrorKind::IrreducibilityUndetermined, std::to_string(best.size()) + " modular factors");

  // A monic factor of degree d has |g_i| <= C(d, i) ||f||_2.
  Int norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c.get_num() * c.get_num();
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n / 2), static_cast<unsigned long>(n / 4));
  Int bound = (isqrt(norm2) + 1) * binom;
  unsigned k = 1;
  for (Int pk(best_p); pk <= 2 * bound; pk *= best_p) ++k;
  const Int modulus = ipow(Int(best_p), k);

  std::vector<ModPoly> mods;
  for (const auto& fac : best) mods.push_back(fac.factor);
  std::vector<IntVector> lifted = hensel_lift(f, mods, best_p, k);
  const std::size_t r = lifted.size();
  for (std::uint32_t mask = 1; mask + 1 < (1u << r); ++mask) {
    int deg = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) deg += static_cast<int>(lifted[i].size()) - 1;
    if (2 * deg > n) continue;
    IntVector prod{1};
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) prod = zmul(prod, lifted[i], modulus);
    for (auto& x : prod) x = mod_centered(x, modulus);
    Poly g = Poly::from_ints(prod);
    if (divmod(f, g).remainder.is_zero()) return g;
  }
  return std::nullopt;
}

}  // namespace traceform
