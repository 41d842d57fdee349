// Acceptance suite: one PASS/FAIL line per criterion, NOTE lines for fixture
// substitutions, and the failing checks under any FAIL.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "traceform/lattice_isometry.hpp"
#include "traceform/normal_form.hpp"
#include "traceform/quadratic_invariants.hpp"
#include "traceform/reference.hpp"
#include "traceform/trace_forms.hpp"
#include "verify.hpp"

using namespace traceform;
using namespace traceform::cli;

namespace {

using Status = FixtureCheck::Status;

// Counts disagreements for one property; keeps the first as the example.
class Property {
 public:
  explicit Property(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failures_++ == 0) first_ = what;
  }
  std::size_t cases() const { return cases_; }

  FixtureCheck result(std::size_t min_cases) const {
    bool ok = failures_ == 0 && cases_ >= min_cases;
    std::string computed = std::to_string(cases_) + " cases, " + std::to_string(failures_) + " failures";
    if (failures_) computed += "; first: " + first_;
    return {name_, ok ? Status::Pass : Status::Fail, ">= " + std::to_string(min_cases) + " cases, 0 failures",
            computed};
  }

 private:
  std::string name_;
  std::size_t cases_ = 0, failures_ = 0;
  std::string first_;
};

std::vector<NumberField> random_fields(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NumberField> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 1 + static_cast<int>(rng() % 6);
    std::vector<long> c(static_cast<std::size_t>(n) + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 13) - 6;
    c.back() = 1;
    try {
      out.push_back(NumberField::from_poly(Poly::from_ints(c), {}, Poly::from_ints(c).to_string()));
    } catch (const Error&) {
    }
  }
  return out;
}

std::vector<NumberField> fixture_fields(const std::string& table_path) {
  std::vector<NumberField> out;
  for (const auto& fam : {reference::cubic_quadruple(), reference::quartic_pair(), reference::quintic_pair(),
                          reference::septic_pair(), reference::spinor_triple()})
    for (const auto& p : fam.polys) out.push_back(NumberField::from_poly(p, {}, p.to_string()));
  for (const auto& p : {reference::octic_first(), reference::octic_second()})
    out.push_back(NumberField::from_poly(p, {}, p.to_string()));
  for (const auto& r : read_field_table(table_path).records)
    out.push_back(NumberField::from_poly(r.coeffs, {}, r.label));
  return out;
}

CriterionResult property_suites(const std::string& table_path) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult res;
  res.id = 7;
  res.name = "property suites";
  res.budget_seconds = 300;
  try {
    {
      Property prop("Hilbert product formula");
      std::mt19937_64 rng(101);
      std::uniform_int_distribution<long> num(-5000, 5000), den(1, 300);
      while (prop.cases() < 500) {
        long an = num(rng), bn = num(rng);
        if (an == 0 || bn == 0) continue;
        Rat a = make_rat(an, den(rng)), b = make_rat(bn, den(rng));
        int prod = 1;
        for (const auto& v : hilbert_support(a, b)) prod *= hilbert_symbol(a, b, v);
        prop.check(prod == 1, to_string(a) + ", " + to_string(b));
      }
      res.checks.push_back(prop.result(500));
    }
    {
      Property prop("Hilbert symbol vs local solvability");
      for (long p : {0L, 2L, 3L, 5L, 7L, 13L})
        for (long a = -30; a <= 30; ++a)
          for (long b = -30; b <= 30; ++b)
            if (a != 0 && b != 0)
              prop.check(hilbert_symbol(Rat(a), Rat(b), Int(p)) == oracle::hilbert_by_solvability(a, b, p),
                         "(" + std::to_string(a) + "," + std::to_string(b) + ")_" + std::to_string(p));
      res.checks.push_back(prop.result(6 * 60 * 60));
    }
    {
      Property prop("Taussky signature law");
      for (const auto& k : random_fields(100, 23)) {
        auto [r, s] = k.signature();
        bool ok = form_signature(trace_gram(k)) == std::make_pair(r + s, s) &&
                  r == oracle::real_roots_by_bisection(k.min_poly());
        prop.check(ok, k.label());
      }
      res.checks.push_back(prop.result(100));
    }
    std::vector<NumberField> fixtures = fixture_fields(table_path);
    {
      Property prop("tame relation |det tr0| = n |det tr| on tame fixtures");
      for (const auto& k : fixtures)
        if (tameness(k) == Tameness::Tame)
          prop.check(abs(trace_zero_gram(k).det()) == k.degree() * abs(k.disc()), k.label());
      res.checks.push_back(prop.result(200));
    }
    {
      Property prop("poly disc = index^2 field disc");
      for (const auto& k : fixtures) prop.check(k.poly_disc() == k.index() * k.index() * k.disc(), k.label());
      for (const auto& k : random_fields(100, 23))
        prop.check(k.poly_disc() == k.index() * k.index() * k.disc(), k.label());
      res.checks.push_back(prop.result(300));
    }
    {
      Property prop("is_isometric vs brute force");
      std::mt19937_64 rng(29);
      for (int t = 0; t < 300; ++t) {
        std::size_t n = 2 + rng() % 2;
        IntMatrix g1 = oracle::random_positive_definite(rng, n, 4);
        IntMatrix g2 = t % 2 ? congruent(g1, oracle::random_unimodular(rng, n, 3, 1))
                             : oracle::random_positive_definite(rng, n, 4);
        g1 = congruent(g1, reduce_gram(g1));
        g2 = congruent(g2, reduce_gram(g2));
        IsometryResult fast = is_isometric(g1, g2);
        bool ok = fast.isometric == brute_force_isometric(g1, g2, 3).found;
        if (ok && fast.isometric) ok = congruent(g1, *fast.witness) == g2 && abs(determinant(*fast.witness)) == 1;
        std::ostringstream what;
        what << g1 << " vs " << g2;
        prop.check(ok, what.str());
      }
      res.checks.push_back(prop.result(300));
    }
    {
      Property prop("Watson criterion vs divisor search");
      std::mt19937_64 rng(43);
      for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng() % 7);
        Int d = 1;
        if (t % 2 == 0) {
          for (long p : {2L, 3L, 5L, 7L}) d *= ipow(Int(p), rng() % (n == 2 ? 4 : 12));
          if (abs(d) > 1000000000) d = 1 + static_cast<long>(rng() % 1000000000);
        } else {
          d = 1 + static_cast<long>(rng() % 1000000000);
        }
        if (n == 2) d = mod_floor(d, Int(100000)) + 1;
        if (rng() % 2) d = -d;
        prop.check(watson_spinor_criterion(n, d) == oracle::watson_by_divisors(n, d),
                   std::to_string(n) + ", " + d.get_str());
      }
      res.checks.push_back(prop.result(200));
    }
    {
      Property prop("HNF and SNF reconstruction");
      std::mt19937_64 rng(11);
      for (int t = 0; t < 500; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix m = oracle::random_matrix(rng, r, c, 15);
        HnfResult h = hnf(m);
        bool ok = h.u * m == h.h && abs(determinant(h.u)) == 1 && oracle::is_row_hnf(h.h);
        SmithResult s = smith_normal_form(m);
        ok = ok && s.u * m * s.v == s.d && abs(determinant(s.u)) == 1 && abs(determinant(s.v)) == 1;
        Int prod = 1;
        for (std::size_t k = 1; ok && k <= std::min(r, c); ++k) {
          prod *= s.d(k - 1, k - 1);
          ok = prod == oracle::gcd_of_minors(m, k);
        }
        std::ostringstream what;
        what << m;
        prop.check(ok, what.str());
      }
      res.checks.push_back(prop.result(500));
    }
  } catch (const std::exception& e) {
    res.checks.push_back({"unexpected error", Status::Fail, "no error", e.what()});
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

void report(const CriterionResult& r, bool& all) {
  bool ok = r.passed();
  all = all && ok;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " (" << std::fixed
            << std::setprecision(2) << r.seconds << " s of " << std::setprecision(0) << r.budget_seconds << " s)"
            << std::defaultfloat << "\n";
  for (const auto& c : r.checks) {
    if (c.status == Status::Pass && r.id != 7) continue;
    std::cout << "  " << to_string(c.status) << " " << c.fixture << ": ";
    if (!c.expected.empty()) std::cout << "expected " << c.expected << ", computed ";
    std::cout << c.computed << "\n";
  }
  std::cout.flush();
}

}  // namespace

int main() {
  bool all = true;
  report(verify_octic(), all);
  report(verify_cubic_quadruple(), all);
  report(verify_quartic_quintic(), all);
  report(verify_septic(), all);
  report(verify_spinor_triple(), all);
  ScanOptions opts;
  opts.jobs = std::max(1u, std::thread::hardware_concurrency());
  report(verify_scan(TRACEFORM_FIXTURE_TABLE, opts), all);
  report(property_suites(TRACEFORM_FIXTURE_TABLE), all);
  return all ? 0 : 1;
}
