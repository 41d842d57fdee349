#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "traceform/diagonalize.hpp"
#include "traceform/factor.hpp"
#include "traceform/hensel.hpp"
#include "traceform/modp.hpp"
#include "traceform/normal_form.hpp"
#include "traceform/poly.hpp"

namespace traceform {
namespace {

TEST(Hnf, MatchesUniqueHnfAmongSmallUnimodularMoves) {
  IntMatrix m = IntMatrix::from_rows({{2, 4}, {1, 3}});
  // Oracle: all U with entries in [-4, 4], det = +-1; collect U*m in HNF.
  std::vector<IntMatrix> found;
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -4; c <= 4; ++c)
        for (long d = -4; d <= 4; ++d) {
          if (a * d - b * c != 1 && a * d - b * c != -1) continue;
          IntMatrix u = IntMatrix::from_rows({{a, b}, {c, d}});
          IntMatrix h = u * m;
          if (oracle::is_row_hnf(h) && std::find(found.begin(), found.end(), h) == found.end()) found.push_back(h);
        }
  // (1,3) - (0,2) = (1,1): the reduced form has 1 above the pivot 2.
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found.front(), IntMatrix::from_rows({{1, 1}, {0, 2}}));
  HnfResult r = hnf(m);
  EXPECT_EQ(r.h, found.front());
  EXPECT_EQ(r.u * m, r.h);
}

TEST(Hnf, TrivialCases) {
  EXPECT_EQ(hnf(IntMatrix::identity(3)).h, IntMatrix::identity(3));
  HnfResult z = hnf(IntMatrix::from_rows({{0, 0}}));
  EXPECT_EQ(z.h, IntMatrix::from_rows({{0, 0}}));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(hnf(IntMatrix()).h, IntMatrix());
}

TEST(Hnf, RandomReconstructionIsUnimodular) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m = oracle::random_matrix(rng, r, c, 20);
    HnfResult res = hnf(m);
    ASSERT_EQ(res.u * m, res.h);
    ASSERT_EQ(abs(determinant(res.u)), 1);
    ASSERT_TRUE(oracle::is_row_hnf(res.h));
  }
}

TEST(Kernel, TraceFunctionalOfQSqrt5) {
  auto k = kernel_basis(IntMatrix::from_rows({{2, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (IntVector{1, -2}));
  // Brute force: every small solution of 2a + b = 0 is a multiple of (1, -2).
  for (long a = -5; a <= 5; ++a)
    for (long b = -10; b <= 10; ++b)
      if (2 * a + b == 0) EXPECT_EQ(b, -2 * a);
}

TEST(Kernel, TrivialCases) {
  EXPECT_TRUE(kernel_basis(IntMatrix::identity(2)).empty());
  auto full = kernel_basis(IntMatrix::zero(1, 3));
  EXPECT_EQ(full.size(), 3u);
}

TEST(Kernel, RandomSaturatedAndCorrect) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 3, c = r + 1 + rng() % 3;
    IntMatrix m = oracle::random_matrix(rng, r, c, 9);
    auto k = kernel_basis(m);
    for (const auto& v : k) {
      IntVector mv(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < c; ++j) mv[i] += m(i, j) * v[j];
      for (const auto& x : mv) ASSERT_EQ(x, 0);
    }
    if (k.empty()) continue;
    std::vector<std::vector<Int>> rows(k.begin(), k.end());
    for (const auto& d : elementary_divisors(IntMatrix::from_rows(rows))) ASSERT_EQ(d, 1);
  }
}

TEST(Smith, DiagonalExample) {
  SmithResult s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  EXPECT_EQ(s.d, IntMatrix::from_rows({{1, 0}, {0, 6}}));
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).d, IntMatrix::identity(3));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{4}})).d, IntMatrix::from_rows({{4}}));
}

TEST(Smith, RandomAgreesWithMinorGcdsAndReconstructs) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m = oracle::random_matrix(rng, r, c, 12);
    SmithResult s = smith_normal_form(m);
    ASSERT_EQ(s.u * m * s.v, s.d);
    ASSERT_EQ(abs(determinant(s.u)), 1);
    ASSERT_EQ(abs(determinant(s.v)), 1);
    Int prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      if (k > 1) ASSERT_TRUE(s.d(k - 1, k - 1) == 0 || s.d(k - 2, k - 2) != 0);
      prod *= s.d(k - 1, k - 1);
      ASSERT_EQ(prod, oracle::gcd_of_minors(m, k)) << "k=" << k;
    }
  }
}

TEST(Resultant, Discriminants) {
  EXPECT_EQ(poly_discriminant(Poly::from_ints({11, 2, 0, 1})), -3299);
  EXPECT_EQ(poly_discriminant(Poly::from_ints({-7, 0, 1})), 28);
  EXPECT_EQ(poly_discriminant(Poly::from_ints({15, 0, 0, 0, 0, 0, 0, 0, 1})),
            Rat(ipow(2, 24) * ipow(3, 7) * ipow(5, 7)));
  EXPECT_THROW(poly_discriminant(Poly::from_ints({3})), Error);
}

TEST(Resultant, AgreesWithSylvesterAndDetectsCommonFactors) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int t = 0; t < 300; ++t) {
    auto rand_poly = [&](int deg) {
      std::vector<long> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = coef(rng);
      if (c.back() == 0) c.back() = 1;
      return Poly::from_ints(c);
    };
    Poly f = rand_poly(1 + static_cast<int>(rng() % 6));
    Poly g = rand_poly(1 + static_cast<int>(rng() % 6));
    if (t % 3 == 0) {
      Poly common = rand_poly(1 + static_cast<int>(rng() % 2));
      f = f * common;
      g = g * common;
      if (f.degree() > 6 || g.degree() > 6) continue;
    }
    Rat r = resultant(f, g);
    ASSERT_EQ(r, oracle::sylvester_resultant(f, g));
    ASSERT_EQ(r == 0, gcd(f, g).degree() > 0);
  }
}

TEST(Sturm, Examples) {
  EXPECT_EQ(sturm_real_roots(Poly::from_ints({-5, 0, 1})), 2);
  EXPECT_EQ(sturm_real_roots(Poly::from_ints({15, 0, 0, 0, 0, 0, 0, 0, 1})), 0);
  EXPECT_EQ(sturm_real_roots(Poly::from_ints({11, 2, 0, 1})), 1);
  EXPECT_EQ(oracle::real_roots_by_bisection(Poly::from_ints({11, 2, 0, 1})), 1);
  EXPECT_THROW(sturm_real_roots(Poly::from_ints({1, 2, 1})), Error);
}

TEST(Sturm, AgreesWithBisectionOnRandomSquarefree) {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<long> coef(-50, 50);
  int checked = 0;
  while (checked < 200) {
    int deg = 1 + static_cast<int>(rng() % 8);
    std::vector<long> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) continue;
    Poly f = Poly::from_ints(c);
    if (gcd(f, f.derivative()).degree() > 0) continue;
    ASSERT_EQ(sturm_real_roots(f), oracle::real_roots_by_bisection(f)) << f.to_string();
    ++checked;
  }
}

std::vector<std::pair<ModPoly, unsigned>> as_pairs(const std::vector<ModFactor>& fs) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  for (const auto& f : fs) out.emplace_back(f.factor, f.multiplicity);
  return out;
}

TEST(FactorModP, Examples) {
  // x^2 + 1 mod 5: brute-force roots are 2 and 3.
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < 5; ++x)
    if ((x * x + 1) % 5 == 0) roots.push_back(x);
  ASSERT_EQ(roots, (std::vector<std::uint64_t>{2, 3}));
  auto f5 = factor_mod_p(Poly::from_ints({1, 0, 1}), 5);
  EXPECT_EQ(as_pairs(f5), (std::vector<std::pair<ModPoly, unsigned>>{{{2, 1}, 1}, {{3, 1}, 1}}));
  auto f3 = factor_mod_p(Poly::from_ints({1, 0, 1}), 3);
  EXPECT_EQ(as_pairs(f3), (std::vector<std::pair<ModPoly, unsigned>>{{{1, 0, 1}, 1}}));
  auto f2 = factor_mod_p(Poly::from_ints({0, 0, 1}), 2);
  EXPECT_EQ(as_pairs(f2), (std::vector<std::pair<ModPoly, unsigned>>{{{0, 1}, 2}}));
  EXPECT_THROW(factor_mod_p(Poly::from_ints({1, 0, 5}), 5), Error);
}

// Brute force: no monic factor of degree 1..deg/2 divides f over F_p.
bool irreducible_by_enumeration(const ModPoly& f, const PrimeField& fp) {
  const int n = modp::degree(f);
  for (int d = 1; 2 * d <= n; ++d) {
    ModPoly cand(static_cast<std::size_t>(d) + 1, 0);
    cand.back() = 1;
    for (;;) {
      if (modp::rem(f, cand, fp).empty()) return false;
      std::size_t i = 0;
      while (i < static_cast<std::size_t>(d) && cand[i] == fp.p() - 1) cand[i++] = 0;
      if (i == static_cast<std::size_t>(d)) break;
      cand[i] += 1;
    }
  }
  return true;
}

TEST(FactorModP, RandomReconstructionAndIrreducibility) {
  std::mt19937_64 rng(16);
  const std::uint64_t primes[] = {2, 3, 5, 7};
  for (int t = 0; t < 300; ++t) {
    std::uint64_t p = primes[t % 4];
    PrimeField fp(p);
    int deg = 1 + static_cast<int>(rng() % 6);
    std::vector<long> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 20) - 10;
    c.back() = 1;
    if (t % 5 == 0) {  // force repeated factors
      Poly g = Poly::from_ints(c);
      g = g * g;
      c.clear();
      for (const auto& x : g.coeffs()) c.push_back(x.get_num().get_si());
    }
    Poly f = Poly::from_ints(c);
    auto fs = factor_mod_p(f, p);
    ModPoly prod{1};
    for (const auto& fac : fs) {
      ASSERT_TRUE(irreducible_by_enumeration(fac.factor, fp));
      ASSERT_TRUE(is_irreducible_mod_p(fac.factor, fp));
      for (unsigned m = 0; m < fac.multiplicity; ++m) prod = modp::mul(prod, fac.factor, fp);
    }
    ASSERT_EQ(prod, modp::make_monic(modp::reduce(f, fp), fp));
  }
}

TEST(FactorModP, LargerPrimeSplitsCompletely) {
  // (x-1)(x-2)...(x-6) mod 1000003.
  Poly f = Poly::constant(Rat(1));
  for (long r = 1; r <= 6; ++r) f = f * Poly::from_ints({-r, 1});
  auto fs = factor_mod_p(f, 1000003);
  ASSERT_EQ(fs.size(), 6u);
  for (const auto& fac : fs) EXPECT_EQ(modp::degree(fac.factor), 1);
}

TEST(Diagonalize, Examples) {
  auto d = diagonalize_symmetric(IntMatrix::from_rows({{2, 1}, {1, 3}}));
  EXPECT_EQ(d.diagonal, (RatVector{Rat(2), Rat(5, 2)}));
  auto h = diagonalize_symmetric(IntMatrix::from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(h.diagonal, (RatVector{Rat(2), Rat(-1, 2)}));
  auto g = diagonalize_symmetric(IntMatrix::from_rows({{3, 0}, {0, -7}}));
  EXPECT_EQ(g.diagonal, (RatVector{Rat(3), Rat(-7)}));
  auto z = diagonalize_symmetric(IntMatrix::from_rows({{0, 0}, {0, 1}}));
  EXPECT_TRUE(z.degenerate);
}

TEST(Diagonalize, RandomCongruenceAndDeterminantClass) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix m = oracle::random_matrix(rng, n, n, 6);
    IntMatrix g = m + m.transpose();
    if (t % 4 == 0)
      for (std::size_t i = 0; i < n; ++i) g(i, i) = 0;
    auto d = diagonalize_symmetric(g);
    RatMatrix dt = congruent(to_rat(g), d.transform);
    ASSERT_EQ(dt, RatMatrix::diagonal(d.diagonal));
    Rat det = determinant(to_rat(g));
    Rat prod = 1;
    for (const auto& x : d.diagonal) prod *= x;
    if (det == 0) {
      ASSERT_TRUE(d.degenerate);
      continue;
    }
    Rat ratio = prod / det;
    ASSERT_TRUE(is_perfect_square(ratio.get_num()) && is_perfect_square(ratio.get_den()));
  }
}

TEST(FactorInteger, Examples) {
  PrimeFactorization a = factor_integer(Int("174960000000"));
  EXPECT_EQ(a.sign, 1);
  EXPECT_EQ(a.factors, (std::vector<std::pair<Int, unsigned>>{{2, 10}, {3, 7}, {5, 7}}));
  PrimeFactorization b = factor_integer(-3299);
  EXPECT_EQ(b.sign, -1);
  EXPECT_EQ(b.factors, (std::vector<std::pair<Int, unsigned>>{{3299, 1}}));
  PrimeFactorization c = factor_integer(1);
  EXPECT_TRUE(c.factors.empty());
  EXPECT_THROW(factor_integer(0), Error);
}

TEST(FactorInteger, RhoSplitsLargeSemiprimeAndCertifies) {
  Int p("1000000000039"), q("998244353");
  PrimeFactorization f = factor_integer(p * q * 12);
  EXPECT_EQ(f.value(), p * q * 12);
  for (const auto& [r, e] : f.factors) EXPECT_TRUE(is_prime(r));
  FactorOptions tiny;
  tiny.max_rho_iterations = 10;
  Int hard = Int("1000000000039") * Int("1000000000061");
  EXPECT_THROW(factor_integer(hard, tiny), Error);
}

TEST(FactorInteger, RandomReconstruction) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 200; ++t) {
    Int n = from_u64(rng() >> (rng() % 40));
    if (n == 0) continue;
    if (t % 2) n = -n;
    PrimeFactorization f = factor_integer(n);
    ASSERT_EQ(f.value(), n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      ASSERT_TRUE(is_prime(f.factors[i].first));
      if (i > 0) ASSERT_LT(f.factors[i - 1].first, f.factors[i].first);
    }
  }
}

TEST(Primality, RejectsBeyondCertifiedRange) {
  EXPECT_TRUE(is_prime(Int("1000000000039")));
  EXPECT_FALSE(is_prime(Int("3215031751")));  // strong pseudoprime to 2,3,5,7
  EXPECT_THROW(is_prime(Int("10000000000000000000000000000000000000000000000009")), Error);
}

Poly random_monic(std::mt19937_64& rng, int deg, long range) {
  std::vector<long> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = static_cast<long>(rng() % (2 * range + 1)) - range;
  c.back() = 1;
  return Poly::from_ints(c);
}

TEST(Hensel, LiftedFactorsMultiplyBackModuloPk) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    Poly f = random_monic(rng, 3 + static_cast<int>(rng() % 5), 9);
    Int disc = f.degree() > 0 ? poly_discriminant(f).get_num() : Int(0);
    if (disc == 0) continue;
    for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL}) {
      if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
      std::vector<ModPoly> mods;
      for (const auto& fac : factor_mod_p(f, Int(p))) mods.push_back(fac.factor);
      const unsigned k = 6;
      Int pk = ipow(Int(p), k);
      auto lifted = hensel_lift(f, mods, p, k);
      ASSERT_EQ(lifted.size(), mods.size());
      Poly prod = Poly::constant(Rat(1));
      for (std::size_t i = 0; i < lifted.size(); ++i) {
        EXPECT_EQ(lifted[i].back(), 1);
        EXPECT_EQ(static_cast<int>(lifted[i].size()) - 1, modp::degree(mods[i]));
        for (std::size_t j = 0; j < mods[i].size(); ++j) EXPECT_EQ(mod_floor(lifted[i][j], Int(p)), mods[i][j]);
        prod = prod * Poly::from_ints(lifted[i]);
      }
      for (int i = 0; i <= f.degree(); ++i)
        EXPECT_EQ(mod_floor(Rat(prod.coeff(i) - f.coeff(i)).get_num(), pk), 0) << f.to_string() << " mod " << p;
      ++checked;
      break;
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(Hensel, FindsFactorsOfProductsAndNoneForIrreducibles) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 80; ++t) {
    Poly g = random_monic(rng, 1 + static_cast<int>(rng() % 3), 12), h = random_monic(rng, 2 + static_cast<int>(rng() % 4), 12);
    Poly f = g * h;
    if (poly_discriminant(f) == 0) continue;
    auto found = find_integer_factor(f);
    ASSERT_TRUE(found.has_value()) << f.to_string();
    EXPECT_GT(found->degree(), 0);
    EXPECT_LE(2 * found->degree(), f.degree());
    EXPECT_TRUE(divmod(f, *found).remainder.is_zero());
  }
  // Irreducible with every reduction split: x^4 - 10x^2 + 1, x^4 + 1, and the
  // degree 8 minimal polynomial of sqrt2 + sqrt3 + sqrt5.
  EXPECT_FALSE(find_integer_factor(Poly::from_ints({1, 0, -10, 0, 1})));
  EXPECT_FALSE(find_integer_factor(Poly::from_ints({1, 0, 0, 0, 1})));
  EXPECT_FALSE(find_integer_factor(Poly::from_ints({576, 0, -960, 0, 352, 0, -40, 0, 1})));
  // Cyclotomic polynomials Phi_15 and Phi_24.
  EXPECT_FALSE(find_integer_factor(Poly::from_ints({1, -1, 0, 1, -1, 1, 0, -1, 1})));
  EXPECT_FALSE(find_integer_factor(Poly::from_ints({1, 0, 0, 0, -1, 0, 0, 0, 1})));
}

}  // namespace
}  // namespace traceform
