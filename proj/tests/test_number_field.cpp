#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "traceform/hensel.hpp"
#include "traceform/number_field.hpp"

namespace traceform {
namespace {

using Outcome = ConjugacyResult::Outcome;

NumberField field(std::initializer_list<long> c) { return NumberField::from_poly(Poly::from_ints(c)); }

PrimeFactorization octic_disc() { return factor_integer(Int(1024) * 2187 * 78125); }

void expect_field_invariants(const NumberField& k) {
  const std::size_t n = static_cast<std::size_t>(k.degree());
  EXPECT_EQ(k.poly_disc(), k.index() * k.index() * k.disc());
  auto [r, s] = k.signature();
  EXPECT_EQ(r + 2 * s, k.degree());
  EXPECT_EQ(sign(k.disc()), s % 2 == 0 ? 1 : -1);
  EXPECT_EQ(abs(determinant(k.integral_basis())), make_rat(1, k.index()));
  EXPECT_EQ(k.integral_basis().row_vector(0)[0], 1);
  for (std::size_t j = 1; j < n; ++j) EXPECT_EQ(k.integral_basis()(0, j), 0);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector ei(n);
    ei[i] = 1;
    Poly pi = k.to_poly(ei);
    Poly charp = oracle::char_poly_leverrier(pi, k.min_poly());
    EXPECT_TRUE(charp.is_integral()) << "basis element " << i << " is not integral";
    EXPECT_EQ(Rat(k.trace(ei)), -charp.coeff(static_cast<int>(n) - 1));
    for (std::size_t j = 0; j < n; ++j) {
      IntVector ej(n);
      ej[j] = 1;
      Poly expected = (pi * k.to_poly(ej)) % k.min_poly();
      EXPECT_EQ(k.to_poly(k.multiply(ei, ej)), expected);
    }
  }
}

// Brute force: no element (1/p) sum a_i b_i with a in [0, p)^n, a != 0, is integral.
bool p_maximal_by_search(const NumberField& k, long p) {
  const std::size_t n = static_cast<std::size_t>(k.degree());
  std::vector<long> a(n, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < n && a[i] == p - 1) a[i++] = 0;
    if (i == n) return true;
    ++a[i];
    RatVector c(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) c[t] += Rat(a[j], p) * k.integral_basis()(j, t);
    if (oracle::is_algebraic_integer(Poly(c), k.min_poly())) return false;
  }
}

TEST(MonicModel, RescalesByLeadingCoefficient) {
  EXPECT_EQ(monic_model(Poly::from_ints({1, 0, -10, -1, 19})), Poly::from_ints({6859, 0, -190, -1, 1}));
  EXPECT_EQ(monic_model(Poly::from_ints({3, 1})), Poly::from_ints({3, 1}));
  // a^{n-1} f(y/a) identity at a few rational points.
  Poly f = Poly::from_ints({1, -18, -23, 0, 16});
  Poly g = monic_model(f);
  for (long y = -5; y <= 5; ++y)
    EXPECT_EQ(g.eval(Rat(y)), f.eval(Rat(y, 16)) * 16 * 16 * 16);
}

TEST(NumberField, RealQuadraticFive) {
  NumberField k = field({-5, 0, 1});
  EXPECT_EQ(k.disc(), 5);
  EXPECT_EQ(k.index(), 2);
  EXPECT_EQ(k.signature(), std::make_pair(2, 0));
  RatMatrix expected = RatMatrix::from_rows(std::vector<RatVector>{{1, 0}, {Rat(1, 2), Rat(1, 2)}});
  EXPECT_EQ(k.integral_basis(), expected);
  expect_field_invariants(k);
}

TEST(NumberField, QuadraticFieldsMatchClassicalFormula) {
  for (long d = -60; d <= 60; ++d) {
    if (d == 0 || d == 1 || squarefree_part(Int(d)) != d) continue;
    NumberField k = field({-d, 0, 1});
    bool one_mod_four = ((d % 4) + 4) % 4 == 1;
    EXPECT_EQ(k.disc(), one_mod_four ? Int(d) : Int(4 * d)) << d;
    RatMatrix expected = one_mod_four
                             ? RatMatrix::from_rows(std::vector<RatVector>{{1, 0}, {Rat(1, 2), Rat(1, 2)}})
                             : RatMatrix::from_rows(std::vector<RatVector>{{1, 0}, {0, 1}});
    EXPECT_EQ(k.integral_basis(), expected) << d;
    EXPECT_EQ(k.signature(), d > 0 ? std::make_pair(2, 0) : std::make_pair(0, 1));
  }
}

TEST(NumberField, OcticDiscriminant) {
  NumberField f = field({15, 0, 0, 0, 0, 0, 0, 0, 1});
  EXPECT_EQ(f.disc(), octic_disc().value());
  EXPECT_EQ(f.disc_factorization().to_string(), octic_disc().to_string());
  EXPECT_EQ(f.signature(), std::make_pair(0, 4));
  EXPECT_EQ(f.index(), 128);
  Int max_den = 1;
  for (const auto& x : f.integral_basis().data()) max_den = std::max(max_den, Int(x.get_den()));
  EXPECT_EQ(max_den, 8);
  expect_field_invariants(f);
  EXPECT_TRUE(p_maximal_by_search(f, 2));

  NumberField l = field({240, 0, 0, 0, 0, 0, 0, 0, 1});
  EXPECT_EQ(l.disc(), octic_disc().value());
  expect_field_invariants(l);
}

TEST(NumberField, CubicWithSquarefreeDiscriminant) {
  NumberField k = field({11, 2, 0, 1});
  EXPECT_EQ(k.integral_basis(), RatMatrix::identity(3));
  EXPECT_EQ(k.disc(), -3299);
  EXPECT_EQ(k.index(), 1);
  EXPECT_EQ(k.signature(), std::make_pair(1, 1));
  EXPECT_TRUE(is_prime(Int(3299)));
}

TEST(NumberField, QuarticSignature) {
  NumberField k = field({5, -4, 5, -1, 1});
  EXPECT_EQ(k.signature(), std::make_pair(0, 2));
  EXPECT_EQ(k.disc(), 7537);
}

TEST(NumberField, NonMonicInputUsesMonicModel) {
  NumberField k = NumberField::from_poly(Poly::from_ints({1, 0, -10, -1, 19}));
  EXPECT_EQ(k.scale(), 19);
  EXPECT_EQ(k.min_poly(), Poly::from_ints({6859, 0, -190, -1, 1}));
  expect_field_invariants(k);
  EXPECT_TRUE(k.totally_real());
}

TEST(NumberField, RandomFieldsAreMaximalAndConsistent) {
  std::mt19937_64 rng(11);
  int built = 0;
  for (int trial = 0; trial < 400 && built < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<long> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = static_cast<long>(rng() % 41) - 20;
    c[static_cast<std::size_t>(n)] = 1;
    // Bias toward non-maximal Z[theta]: make the constant term divisible by a square.
    if (trial % 2 == 0) c[0] *= 4;
    NumberField k = [&]() -> NumberField {
      try {
        return NumberField::from_poly(Poly::from_ints(c));
      } catch (const Error&) {
        return field({-2, 0, 1});
      }
    }();
    if (k.min_poly() != Poly::from_ints(c)) continue;
    ++built;
    expect_field_invariants(k);
    EXPECT_EQ(k.signature().first, oracle::real_roots_by_bisection(k.min_poly()));
    for (const auto& [p, e] : k.disc_factorization().factors) {
      (void)e;
      if (ipow(p, static_cast<unsigned long>(n)) > 3000) continue;
      EXPECT_TRUE(p_maximal_by_search(k, p.get_si())) << k.min_poly().to_string() << " at " << p;
    }
  }
  EXPECT_GE(built, 40);
}

TEST(Irreducibility, ReducibleIrreducibleAndUndetermined) {
  try {
    certify_irreducible(Poly::from_ints({-4, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Reducible);
  }
  try {
    certify_irreducible(Poly::from_ints({1, 2, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Reducible);
  }
  // Product of two quadratics with no rational root: the factor is exhibited.
  try {
    certify_irreducible(Poly::from_ints({4, 0, 0, 0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Reducible);
  }
  // Irreducible but reducible modulo every prime: patterns cannot decide, lifting can.
  EXPECT_NO_THROW(certify_irreducible(Poly::from_ints({1, 0, -10, 0, 1})));
  EXPECT_NO_THROW(certify_irreducible(Poly::from_ints({4, 0, -23, 0, 1})));
  // With the modular factor budget exhausted the answer is undetermined, not a guess.
  try {
    find_integer_factor(Poly::from_ints({1, 0, -10, 0, 1}), kDefaultSeed, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IrreducibilityUndetermined);
  }
  EXPECT_NO_THROW(certify_irreducible(Poly::from_ints({15, 0, 0, 0, 0, 0, 0, 0, 1})));
  EXPECT_NO_THROW(certify_irreducible(Poly::from_ints({1, -1, -4, -3, 4, 0, -3, 1})));
}

TEST(Irreducibility, NeverCertifiesAProduct) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 80; ++t) {
    auto rnd = [&](int deg) {
      std::vector<long> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
      c.back() = 1;
      return Poly::from_ints(c);
    };
    Poly f = rnd(2 + static_cast<int>(rng() % 2)) * rnd(2 + static_cast<int>(rng() % 3));
    try {
      certify_irreducible(f);
      ADD_FAILURE() << f.to_string();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Reducible) << f.to_string();
    }
  }
}

TEST(SplittingType, GaussianIntegers) {
  NumberField k = field({1, 0, 1});
  using Pairs = std::vector<std::pair<unsigned, unsigned>>;
  EXPECT_EQ(splitting_type(k, Int(5)).pairs, (Pairs{{1, 1}, {1, 1}}));
  EXPECT_EQ(splitting_type(k, Int(2)).pairs, (Pairs{{2, 1}}));
  EXPECT_EQ(splitting_type(k, Int(3)).pairs, (Pairs{{1, 2}}));
  EXPECT_EQ(splitting_type(k, Int(3)).to_string(), "[(1,2)]");
}

TEST(SplittingType, IndexObstruction) {
  NumberField k = field({-5, 0, 1});
  try {
    splitting_type(k, Int(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexObstruction);
  }
}

TEST(SplittingType, DedekindConsistencyAndDegreeSum) {
  std::vector<NumberField> fields = {
      field({11, 2, 0, 1}), field({5, -4, 5, -1, 1}), field({-1, -2, -1, 2, 0, 1}),
      field({1, -1, -4, -3, 4, 0, -3, 1}), field({15, 0, 0, 0, 0, 0, 0, 0, 1})};
  for (const auto& k : fields) {
    for (std::uint32_t p : primes_up_to(200)) {
      if (mpz_divisible_ui_p(k.index().get_mpz_t(), p)) continue;
      PrimeSplit s = splitting_type(k, Int(p));
      unsigned total = 0, linear = 0;
      for (const auto& [e, f] : s.pairs) {
        total += e * f;
        if (f == 1) ++linear;
      }
      EXPECT_EQ(total, static_cast<unsigned>(k.degree()));
      EXPECT_EQ(s.unramified(), !mpz_divisible_ui_p(k.disc().get_mpz_t(), p));
      if (s.unramified()) EXPECT_EQ(linear, oracle::roots_mod_p_by_evaluation(k.min_poly(), p));
    }
  }
}

TEST(Tameness, Examples) {
  EXPECT_EQ(is_tame_at(field({-5, 0, 1}), Int(5)), Tameness::Tame);
  EXPECT_EQ(is_tame_at(field({1, 0, 1}), Int(2)), Tameness::Wild);
  EXPECT_EQ(is_tame_at(field({1, 0, 1}), Int(3)), Tameness::Unramified);
  NumberField octic = field({15, 0, 0, 0, 0, 0, 0, 0, 1});
  EXPECT_EQ(is_tame_at(octic, Int(2)), Tameness::Wild);
  EXPECT_EQ(tameness(octic), Tameness::Wild);
  EXPECT_EQ(tameness(field({11, 2, 0, 1})), Tameness::Tame);
  EXPECT_EQ(tameness(field({-2, 0, 1})), Tameness::Wild);
  // p divides the index of these models.
  EXPECT_EQ(is_tame_at(field({4, 0, 1}), Int(2)), Tameness::Wild);
  EXPECT_EQ(is_tame_at(field({-16, 0, 0, 1}), Int(2)), Tameness::Tame);
  EXPECT_EQ(is_tame_at(field({-81, 0, 0, 1}), Int(3)), Tameness::Wild);
  NumberField quartic = field({4, 23, -19, -1, 1});
  ASSERT_TRUE(mpz_divisible_ui_p(quartic.index().get_mpz_t(), 2));
  EXPECT_NO_THROW(is_tame_at(quartic, Int(2)));
}

// The model of p * theta has p | index; its answer must match Dedekind's
// criterion on the original model.
TEST(Tameness, IndexDivisibleModelsAgreeWithDedekind) {
  std::mt19937_64 rng(61);
  int compared = 0, tame = 0, wild = 0;
  for (int t = 0; t < 400 && compared < 120; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<long> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 17) - 8;
    c.back() = 1;
    std::optional<NumberField> k;
    try {
      k = NumberField::from_poly(Poly::from_ints(c));
    } catch (const Error&) {
      continue;
    }
    for (long p : {2L, 3L, 5L}) {
      if (p > n || !mpz_divisible_ui_p(k->disc().get_mpz_t(), static_cast<unsigned long>(p)) ||
          mpz_divisible_ui_p(k->index().get_mpz_t(), static_cast<unsigned long>(p)))
        continue;
      IntVector scaled(c.begin(), c.end());
      Int pk = 1;
      for (int i = n; i >= 0; --i, pk *= p) scaled[static_cast<std::size_t>(i)] *= pk;
      NumberField m = NumberField::from_poly(scaled);
      ASSERT_TRUE(mpz_divisible_ui_p(m.index().get_mpz_t(), static_cast<unsigned long>(p)));
      Tameness expected = is_tame_at(*k, Int(p));
      EXPECT_EQ(is_tame_at(m, Int(p)), expected) << Poly::from_ints(c).to_string() << " at " << p;
      ++compared;
      (expected == Tameness::Tame ? tame : wild) += 1;
    }
  }
  EXPECT_GT(compared, 60);
  EXPECT_GT(tame, 10);
  EXPECT_GT(wild, 10);
}

TEST(FundamentalDisc, Conventions) {
  EXPECT_TRUE(is_fundamental_disc(Int(-3299)));
  EXPECT_TRUE(is_fundamental_disc(Int(12)));
  EXPECT_FALSE(is_fundamental_disc(Int(18)));
  EXPECT_TRUE(is_fundamental_disc(Int(-8)));
  EXPECT_TRUE(is_fundamental_disc(Int(-4 * 5)));  // m = -5 = 3 mod 4, squarefree
  EXPECT_FALSE(is_fundamental_disc(Int(-4 * 7)));  // m = -7 = 1 mod 4
  EXPECT_FALSE(is_fundamental_disc(Int(12), FundamentalMode::StrictSquarefree));
  EXPECT_FALSE(is_fundamental_disc(Int(16)));
  EXPECT_TRUE(is_fundamental_disc(Int(1)));
}

TEST(Conjugacy, IdentityAndQuadratic) {
  NumberField a = field({-5, 0, 1});
  auto same = are_conjugate(a, a);
  EXPECT_EQ(same.outcome, Outcome::Yes);
  EXPECT_EQ(*same.witness, (RatVector{0, 1}));

  NumberField b = field({-1, -1, 1});
  auto r = are_conjugate(a, b);
  ASSERT_EQ(r.outcome, Outcome::Yes) << r.reason;
  // Image of sqrt(5) is +-(2y - 1).
  RatVector w = *r.witness;
  EXPECT_TRUE((w == RatVector{-1, 2}) || (w == RatVector{1, -2}));
  auto back = are_conjugate(b, a);
  ASSERT_EQ(back.outcome, Outcome::Yes);
  EXPECT_EQ(are_conjugate(a, field({-2, 0, 1})).outcome, Outcome::No);
}

TEST(Conjugacy, CubicQuadrupleIsPairwiseDistinct) {
  std::vector<NumberField> k = {field({11, 2, 0, 1}), field({27, -16, 0, 1}), field({-8, 9, -1, 1}),
                                field({10, 3, -1, 1})};
  for (const auto& f : k) EXPECT_EQ(f.disc(), -3299);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) {
      auto r = are_conjugate(k[i], k[j]);
      EXPECT_EQ(r.outcome, Outcome::No) << r.reason;
      EXPECT_TRUE(r.split_first.has_value());
    }
}

TEST(Conjugacy, OcticPairNeedsPadicSearch) {
  NumberField f = field({15, 0, 0, 0, 0, 0, 0, 0, 1});
  NumberField l = field({240, 0, 0, 0, 0, 0, 0, 0, 1});
  auto r = are_conjugate(f, l);
  EXPECT_EQ(r.outcome, Outcome::No) << r.reason;
  EXPECT_FALSE(r.split_first.has_value());
}

TEST(Conjugacy, SepticPairDistinguishedAt2741) {
  NumberField f = field({1, -1, -4, 1, 4, 0, -3, 1});
  NumberField l = field({-1, -1, -2, -3, 4, 2, -3, 1});
  EXPECT_EQ(f.disc(), 2741 * 2741);
  EXPECT_EQ(l.disc(), 2741 * 2741);
  auto r = are_conjugate(f, l);
  ASSERT_EQ(r.outcome, Outcome::No) << r.reason;
  ASSERT_TRUE(r.split_first.has_value());
  EXPECT_EQ(r.split_first->p, 2741);
}

TEST(Conjugacy, TschirnhausenTransformsAreRecognised) {
  std::mt19937_64 rng(3);
  std::vector<Poly> bases = {Poly::from_ints({11, 2, 0, 1}), Poly::from_ints({5, -4, 5, -1, 1}),
                             Poly::from_ints({-1, -2, -1, 2, 0, 1}), Poly::from_ints({-2, 0, 0, 1})};
  int checked = 0;
  for (const auto& g : bases) {
    for (int t = 0; t < 4; ++t) {
      std::vector<long> e(static_cast<std::size_t>(g.degree()));
      for (auto& x : e) x = static_cast<long>(rng() % 5) - 2;
      e[1] = e[1] == 0 ? 1 : e[1];
      Poly alpha = Poly::from_ints(e);
      Poly charp = oracle::char_poly_leverrier(alpha, g);
      if (gcd(charp, charp.derivative()).degree() > 0) continue;
      NumberField f = NumberField::from_poly(charp);
      NumberField l = NumberField::from_poly(g);
      auto r = are_conjugate(f, l);
      ASSERT_EQ(r.outcome, Outcome::Yes) << charp.to_string() << ": " << r.reason;
      // The witness must be a root of f in L, checked by the oracle's char poly.
      Poly w(*r.witness);
      EXPECT_EQ(oracle::char_poly_leverrier(w, g), charp);
      EXPECT_EQ(are_conjugate(l, f).outcome, Outcome::Yes);
      ++checked;
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(Conjugacy, SymmetricAndReflexiveOnRandomFields) {
  std::mt19937_64 rng(29);
  std::vector<NumberField> fields;
  while (fields.size() < 50) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<long> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
    c.back() = 1;
    try {
      fields.push_back(NumberField::from_poly(Poly::from_ints(c)));
    } catch (const Error&) {
    }
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    EXPECT_EQ(are_conjugate(fields[i], fields[i]).outcome, Outcome::Yes);
    for (std::size_t j = i + 1; j < fields.size(); ++j) {
      if (fields[i].degree() != fields[j].degree() || fields[i].disc() != fields[j].disc()) continue;
      auto a = are_conjugate(fields[i], fields[j]);
      auto b = are_conjugate(fields[j], fields[i]);
      EXPECT_EQ(a.outcome, b.outcome) << fields[i].label() << " vs " << fields[j].label();
      EXPECT_NE(a.outcome, Outcome::Undetermined);
    }
  }
}

}  // namespace
}  // namespace traceform
