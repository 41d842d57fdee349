#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "traceform/lattice_isometry.hpp"
#include "traceform/reference.hpp"

namespace traceform {
namespace {

IntMatrix m2(long a, long b, long c) { return IntMatrix::from_rows({{a, b}, {b, c}}); }

// Coordinate box that contains every vector of norm <= bound: x_i^2 <= bound * (G^-1)_ii.
long safe_box(const IntMatrix& g, long bound) {
  RatMatrix inv = inverse(to_rat(g));
  long box = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Rat r = inv(i, i) * bound;
    box = std::max(box, isqrt(floor_rat(r)).get_si() + 1);
  }
  return box;
}

TEST(ShortVectors, Examples) {
  auto id = short_vectors(IntMatrix::identity(2), Int(1));
  ASSERT_EQ(id.vectors.size(), 2u);
  for (const auto& v : id.vectors) EXPECT_EQ(v.norm, 1);
  auto a2 = short_vectors(m2(2, 1, 2), Int(2));
  EXPECT_EQ(a2.vectors.size(), 3u);
  EXPECT_TRUE(short_vectors(IntMatrix::from_rows({{10}}), Int(9)).vectors.empty());
  EXPECT_THROW(short_vectors(m2(1, 2, 1), Int(3)), Error);
}

TEST(ShortVectors, CompleteAgainstBoxEnumeration) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng() % 4;
    IntMatrix g = oracle::random_positive_definite(rng, n, 5);
    long bound = 1 + static_cast<long>(rng() % 25);
    long box = safe_box(g, bound);
    if (std::pow(2 * box + 1, n) > 2e6) continue;
    std::vector<long> expect = oracle::theta_by_box(g, bound, box);
    std::vector<long> got(bound + 1, 0);
    for (const auto& v : short_vectors(g, Int(bound)).vectors) {
      EXPECT_EQ(bilinear(g, v.coords, v.coords), v.norm);
      got[v.norm.get_ui()] += 2;
    }
    EXPECT_EQ(got, expect) << g;
  }
}

TEST(ThetaSlice, Identity) {
  auto r = theta_slice(IntMatrix::identity(2), 2);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], 4);
  EXPECT_EQ(r[1], 4);
}

TEST(Isometry, Examples) {
  auto yes = is_isometric(m2(2, 1, 2), m2(2, -1, 2));
  ASSERT_TRUE(yes.isometric);
  EXPECT_EQ(congruent(m2(2, 1, 2), *yes.witness), m2(2, -1, 2));

  auto no = is_isometric(m2(1, 0, 11), m2(3, 1, 4));
  EXPECT_FALSE(no.isometric);
  EXPECT_EQ(no.separating_invariant, "minimum 1 vs 3");

  EXPECT_THROW(is_isometric(m2(1, 0, -1), m2(1, 0, 1)), Error);
  EXPECT_THROW(is_isometric(IntMatrix::identity(2), IntMatrix::identity(3)), Error);
}

TEST(Isometry, SpinorTripleTraceFormsPairwiseDistinct) {
  std::vector<QuadLattice> forms;
  for (const auto& p : reference::spinor_triple().polys)
    forms.push_back(trace_gram(NumberField::from_poly(p)));
  for (std::size_t i = 0; i < forms.size(); ++i) {
    EXPECT_TRUE(is_isometric(forms[i], forms[i]).isometric);
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      auto r = is_isometric(forms[i], forms[j]);
      EXPECT_FALSE(r.isometric) << forms[i].label() << " vs " << forms[j].label();
      EXPECT_FALSE(r.separating_invariant.empty());
    }
  }
}

TEST(Automorphisms, Counts) {
  EXPECT_EQ(automorphism_count(IntMatrix::identity(2)), 8u);
  EXPECT_EQ(automorphism_count(m2(2, 1, 2)), 12u);
  EXPECT_EQ(automorphism_count(IntMatrix::from_rows({{7}})), 2u);
  EXPECT_EQ(automorphism_count(IntMatrix::identity(3)), 48u);
  EXPECT_EQ(automorphism_count(m2(1, 0, 2)), 4u);
}

TEST(Isometry, AgreesWithBruteForce) {
  std::mt19937_64 rng(29);
  int positives = 0, negatives = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + rng() % 2;
    IntMatrix g1 = oracle::random_positive_definite(rng, n, 4);
    // Half the pairs are related by a small unimodular change, half are unrelated.
    IntMatrix g2 = t % 2 ? congruent(g1, oracle::random_unimodular(rng, n, 3, 1))
                         : oracle::random_positive_definite(rng, n, 4);
    g1 = congruent(g1, reduce_gram(g1));
    g2 = congruent(g2, reduce_gram(g2));
    auto fast = is_isometric(g1, g2);
    auto slow = brute_force_isometric(g1, g2, 3);
    // Both reduced: an isometry between them has small entries, so the box search is exhaustive enough.
    EXPECT_EQ(fast.isometric, slow.found) << g1 << " vs " << g2;
    if (fast.isometric) {
      ++positives;
      EXPECT_EQ(congruent(g1, *fast.witness), g2);
      EXPECT_EQ(abs(determinant(*fast.witness)), 1);
    } else {
      ++negatives;
    }
  }
  EXPECT_GT(positives, 50);
  EXPECT_GT(negatives, 50);
}

TEST(Isometry, EquivalenceRelation) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + rng() % 4;
    IntMatrix a = oracle::random_positive_definite(rng, n, 5);
    IntMatrix b = congruent(a, oracle::random_unimodular(rng, n, 12, 2));
    IntMatrix c = congruent(b, oracle::random_unimodular(rng, n, 12, 2));
    auto ab = is_isometric(a, b), ba = is_isometric(b, a), ac = is_isometric(a, c);
    ASSERT_TRUE(ab.isometric && ba.isometric && ac.isometric) << a;
    EXPECT_EQ(congruent(a, *ab.witness), b);
    EXPECT_EQ(congruent(b, *ba.witness), a);
    EXPECT_EQ(congruent(a, *ac.witness), c);
    EXPECT_EQ(automorphism_count(a), automorphism_count(c));
  }
}

TEST(Isometry, NodeBudget) {
  IsometryOptions tiny;
  tiny.max_nodes = 1;
  try {
    is_isometric(IntMatrix::identity(4), IntMatrix::identity(4), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchExhausted);
  }
}

}  // namespace
}  // namespace traceform
