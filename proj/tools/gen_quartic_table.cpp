// One-off generator for data/quartic_fixtures.tbl: every totally real quartic
// field with fundamental discriminant <= D that shares its discriminant with
// a non-conjugate field.
//
// Hunter's theorem gives a generator alpha of O_K with 0 <= tr(alpha) <= 2 and
// T2(alpha) <= tr(alpha)^2 / 4 + gamma_3 (d / 4)^(1/3), gamma_3 = 2^(1/3),
// unless alpha lies in a proper subfield. A quartic field with fundamental
// discriminant has no quadratic subfield (its discriminant would be divisible
// by the square of a quadratic discriminant), so the enumeration is complete.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>

#include "traceform/arith_equivalence.hpp"
#include "traceform/number_field.hpp"

namespace {

using i128 = __int128;
using traceform::Int;

Int to_int(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Int hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0UL));
  Int r = hi * Int("18446744073709551616") + lo;
  return neg ? Int(-r) : r;
}

// Discriminant of x^4 + b x^3 + c x^2 + d x + e.
i128 quartic_disc(i128 b, i128 c, i128 d, i128 e) {
  return 256 * e * e * e - 192 * b * d * e * e - 128 * c * c * e * e + 144 * c * d * d * e - 27 * d * d * d * d +
         144 * b * b * c * e * e - 6 * b * b * d * d * e - 80 * b * c * c * d * e + 18 * b * c * d * d * d +
         16 * c * c * c * c * e - 4 * c * c * c * d * d - 27 * b * b * b * b * e * e + 18 * b * b * b * c * d * e -
         4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e + b * b * c * c * d * d;
}

// Squarefree part of m > 0 when it is at most bound.
std::optional<long> small_squarefree_part(i128 m, long bound) {
  static const auto& small = traceform::primes_up_to(1000);
  for (std::uint32_t p : small) {
    i128 pp = static_cast<i128>(p) * p;
    while (m % pp == 0) m /= pp;
  }
  traceform::FactorOptions opts;
  opts.trial_bound = 1000;
  Int s = traceform::squarefree_part(to_int(m), opts);
  if (s > bound) return std::nullopt;
  return s.get_si();
}

// Factorization pattern of a quartic mod an odd prime p not dividing its
// discriminant: the root count and Stickelberger's parity (-1)^(4 - r) =
// (disc / p) determine it. Codes: 1 = 1111, 2 = 112, 3 = 13, 4 = 22, 5 = 4.
int pattern_code(const std::vector<long>& c, long p, i128 disc) {
  int roots = 0;
  for (long x = 0; x < p; ++x) {
    long v = 1;
    for (int i = 3; i >= 0; --i) v = ((v * x + c[static_cast<std::size_t>(i)]) % p + p) % p;
    if (v == 0) ++roots;
  }
  long dm = static_cast<long>(((disc % p) + p) % p);
  long leg = 1;
  {
    long base = dm, e = (p - 1) / 2, r = 1;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    leg = r == 1 ? 1 : -1;
  }
  switch (roots) {
    case 4: return 1;
    case 2: return 2;
    case 1: return 3;
    default: return leg == 1 ? 4 : 5;
  }
}

constexpr std::size_t kPatternPrimes = 46;

struct Candidate {
  std::vector<long> coeffs;  // c0..c4
  long t2;
  long sqfree;               // squarefree part of disc(f), shared with the field discriminant
  std::vector<int> pattern;  // per odd prime; 0 where p | disc(f)
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.t2 != b.t2) return a.t2 < b.t2;
  long sa = 0, sb = 0;
  for (long x : a.coeffs) sa += std::labs(x);
  for (long x : b.coeffs) sb += std::labs(x);
  if (sa != sb) return sa < sb;
  return a.coeffs < b.coeffs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the totally real quartic fixture table"};
  long max_disc = 1'000'000;
  std::string out_path = "quartic_fixtures.tbl";
  app.add_option("--max-disc", max_disc, "discriminant bound D");
  app.add_option("-o,--out", out_path, "output table");
  bool candidates_only = false;
  app.add_flag("--candidates-only", candidates_only, "stop after the enumeration");
  CLI11_PARSE(app, argc, argv);

  auto elapsed = [t0 = std::chrono::steady_clock::now()] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  std::vector<std::uint32_t> pattern_primes;
  for (std::uint32_t p : traceform::primes_up_to(1000))
    if (p > 2 && pattern_primes.size() < kPatternPrimes) pattern_primes.push_back(p);
  std::vector<Candidate> candidates;
  for (long a1 = 0; a1 <= 2; ++a1) {
    double bound = a1 * a1 / 4.0 + std::cbrt(2.0) * std::cbrt(max_disc / 4.0) + 1e-9;
    double r = bound / 4;
    long b = -a1;
    long c_lo = static_cast<long>(std::floor((a1 * a1 - bound) / 2)), c_hi = (3 * a1 * a1) / 8;
    long d_max = static_cast<long>(std::ceil(4 * std::pow(r, 1.5))), e_max = static_cast<long>(std::ceil(r * r));
    for (long c = c_lo; c <= c_hi; ++c) {
      long t2 = b * b - 2 * c;  // power sum s2 = T2 for real roots
      if (t2 > bound) continue;
      for (long d = -d_max; d <= d_max; ++d)
        for (long e = -e_max; e <= e_max; ++e) {
          if (e == 0) continue;
          i128 disc = quartic_disc(b, c, d, e);
          if (disc <= 0) continue;
          // With positive discriminant: four real roots iff both quantities are negative.
          i128 p = 8 * static_cast<i128>(c) - 3 * static_cast<i128>(b) * b;
          i128 q = 64 * static_cast<i128>(e) - 16 * static_cast<i128>(c) * c + 16 * static_cast<i128>(b) * b * c -
                   16 * static_cast<i128>(b) * d - 3 * static_cast<i128>(b) * b * b * b;
          if (p >= 0 || q >= 0) continue;
          // disc(f) = index^2 d_K and d_K fundamental: d_K is the squarefree part or four times it.
          auto sq = small_squarefree_part(disc, max_disc);
          if (!sq) continue;
          Candidate cand{{e, d, c, b, 1}, t2, *sq, {}};
          for (std::uint32_t p : pattern_primes) {
            if (disc % p == 0) {
              cand.pattern.push_back(0);
            } else {
              cand.pattern.push_back(pattern_code(cand.coeffs, p, disc));
            }
          }
          candidates.push_back(std::move(cand));
        }
    }
  }
  std::cerr << candidates.size() << " candidate polynomials (" << elapsed() << " s)\n";
  if (candidates_only) return 0;

  // Candidates with the same squarefree discriminant part and compatible
  // splitting patterns are taken to generate the same field. Distinct patterns
  // at a prime dividing neither polynomial discriminant prove non-conjugacy.
  struct Cluster {
    std::vector<int> pattern;
    Candidate rep;
  };
  std::map<long, std::vector<Cluster>> by_sqfree;
  for (const auto& cand : candidates) {
    auto& clusters = by_sqfree[cand.sqfree];
    bool placed = false;
    for (auto& cl : clusters) {
      bool compatible = true;
      for (std::size_t i = 0; i < kPatternPrimes && compatible; ++i)
        compatible = cl.pattern[i] == 0 || cand.pattern[i] == 0 || cl.pattern[i] == cand.pattern[i];
      if (!compatible) continue;
      for (std::size_t i = 0; i < kPatternPrimes; ++i)
        if (cl.pattern[i] == 0) cl.pattern[i] = cand.pattern[i];
      if (better(cand, cl.rep)) cl.rep = cand;
      placed = true;
      break;
    }
    if (!placed) clusters.push_back({cand.pattern, cand});
  }

  // Build one field per cluster in classes that could hold two fields.
  struct Cls {
    traceform::NumberField field;
    Candidate rep;
  };
  std::map<Int, std::vector<Cls>> by_disc;
  std::size_t built = 0, reducible = 0;
  for (const auto& [sq, clusters] : by_sqfree) {
    if (clusters.size() < 2) continue;
    for (const auto& cl : clusters) {
      traceform::IntVector coeffs(cl.rep.coeffs.begin(), cl.rep.coeffs.end());
      std::optional<traceform::NumberField> k;
      try {
        k = traceform::NumberField::from_poly(coeffs);
      } catch (const traceform::Error& e) {
        if (e.kind() != traceform::ErrorKind::Reducible) throw;
        ++reducible;
        continue;
      }
      ++built;
      if (!k->totally_real() || k->disc() > max_disc || !traceform::is_fundamental_disc(k->disc())) continue;
      auto& classes = by_disc[k->disc()];
      bool placed = false;
      for (auto& other : classes) {
        if (traceform::non_conjugacy_certificate(*k, other.field, 2000)) continue;
        auto r = traceform::are_conjugate(*k, other.field);
        if (r.outcome == traceform::ConjugacyResult::Outcome::Undetermined)
          throw std::runtime_error("conjugacy undetermined for " + k->defining_poly().to_string());
        if (r.outcome == traceform::ConjugacyResult::Outcome::Yes) {
          if (better(cl.rep, other.rep)) other = {*k, cl.rep};
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({*k, cl.rep});
    }
  }
  std::cerr << by_sqfree.size() << " discriminant classes, " << built << " fields built, " << reducible
            << " reducible (" << elapsed() << " s)\n";

  std::ofstream out(out_path);
  std::size_t groups = 0, fields = 0;
  for (const auto& [d, classes] : by_disc)
    if (classes.size() >= 2) {
      ++groups;
      fields += classes.size();
    }
  out << "# Totally real quartic fields with fundamental discriminant <= " << max_disc << "\n"
      << "# sharing their discriminant with a non-conjugate field: every such field, one\n"
      << "# reduced defining polynomial each (Hunter search, discriminants recomputed\n"
      << "# with the maximal order). " << groups << " groups, " << fields << " fields.\n"
      << "# label | c0,c1,c2,c3,c4 | disc\n";
  for (auto& [d, classes] : by_disc) {
    if (classes.size() < 2) continue;
    std::sort(classes.begin(), classes.end(), [](const Cls& a, const Cls& b) { return better(a.rep, b.rep); });
    for (std::size_t i = 0; i < classes.size(); ++i) {
      out << "4.4." << d << "." << (i + 1) << " | ";
      for (std::size_t j = 0; j < 5; ++j) out << (j ? "," : "") << classes[i].rep.coeffs[j];
      out << " | " << d << "\n";
    }
  }
  std::cerr << groups << " groups, " << fields << " fields written to " << out_path << "\n";
}
