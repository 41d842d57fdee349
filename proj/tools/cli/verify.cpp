#include "verify.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <set>

#include "decide.hpp"
#include "traceform/arith_equivalence.hpp"
#include "traceform/quadratic_invariants.hpp"
#include "traceform/reference.hpp"
#include "traceform/trace_forms.hpp"

namespace traceform::cli {

const char* to_string(FixtureCheck::Status s) noexcept {
  switch (s) {
    case FixtureCheck::Status::Pass: return "PASS";
    case FixtureCheck::Status::Fail: return "FAIL";
    case FixtureCheck::Status::Note: return "NOTE";
  }
  return "?";
}

bool CriterionResult::passed() const {
  for (const auto& c : checks)
    if (c.status == FixtureCheck::Status::Fail) return false;
  return seconds <= budget_seconds;
}

namespace {

using Status = FixtureCheck::Status;

class Recorder {
 public:
  Recorder(int id, std::string name, double budget) : start_(std::chrono::steady_clock::now()) {
    r_.id = id;
    r_.name = std::move(name);
    r_.budget_seconds = budget;
  }

  void expect(std::string fixture, bool ok, std::string expected, std::string computed) {
    r_.checks.push_back({std::move(fixture), ok ? Status::Pass : Status::Fail, std::move(expected), std::move(computed)});
  }
  void note(std::string fixture, std::string expected, std::string computed) {
    r_.checks.push_back({std::move(fixture), Status::Note, std::move(expected), std::move(computed)});
  }

  // Runs body, recording an unexpected library error as a failed check.
  template <class F>
  CriterionResult run(F&& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      expect("unexpected error", false, "no error", e.what());
    }
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(r_);
  }

 private:
  CriterionResult r_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<NumberField> build(const reference::FieldFamily& fam) {
  std::vector<NumberField> out;
  for (std::size_t i = 0; i < fam.polys.size(); ++i)
    out.push_back(NumberField::from_poly(fam.polys[i], {}, fam.name + "#" + std::to_string(i + 1)));
  return out;
}

std::string sig(std::pair<int, int> s) { return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")"; }

bool complete_trace(const EquivalenceVerdict& v) {
  if (v.proof_trace.empty() || v.proof_trace.back().step != "eichler") return false;
  for (const auto& s : v.proof_trace)
    if (!s.holds) return false;
  return true;
}

void family_discs(Recorder& rec, const std::vector<NumberField>& ks, const Int& expected) {
  for (const auto& k : ks)
    rec.expect(k.label() + " disc", k.disc() == expected, expected.get_str(), k.disc().get_str());
}

void decide_all_pairs(Recorder& rec, const std::vector<NumberField>& ks) {
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      DecideReport d = decide_fields(ks[i], ks[j]);
      rec.expect(ks[i].label() + " vs " + ks[j].label(), d.outcome == DecideReport::Outcome::Equivalent,
                 "equivalent", std::string(to_string(d.outcome)) + " (" + d.reason + ")");
    }
}

}  // namespace

CriterionResult verify_octic() {
  return Recorder(1, "octic pair x^8+15, x^8+240", 10).run([](Recorder& rec) {
    const Int expected = ipow(Int(2), 10) * ipow(Int(3), 7) * ipow(Int(5), 7);
    NumberField f = NumberField::from_poly(reference::octic_first(), {}, "x^8+15");
    NumberField l = NumberField::from_poly(reference::octic_second(), {}, "x^8+240");
    for (const auto* k : {&f, &l})
      rec.expect(k->label() + " disc", k->disc() == expected, "2^10 * 3^7 * 5^7",
                 k->disc_factorization().to_string());
    QuadLattice mf = trace_gram(f.with_basis(reference::octic_first_basis()));
    QuadLattice ml = trace_gram(l.with_basis(reference::octic_second_basis()));
    rec.expect("M_F in the pinned basis", mf.gram() == reference::octic_first_gram(), "printed matrix",
               mf.gram() == reference::octic_first_gram() ? "equal entrywise" : "differs");
    rec.expect("M_L in the pinned basis", ml.gram() == reference::octic_second_gram(), "printed matrix",
               ml.gram() == reference::octic_second_gram() ? "equal entrywise" : "differs");
    bool zf = gram_mod(mf, Int(2)).is_zero, zl = gram_mod(ml, Int(2)).is_zero;
    rec.expect("M_F mod 2 zero", !zf, "false", zf ? "true" : "false");
    rec.expect("M_L mod 2 zero", zl, "true", zl ? "true" : "false");
    DecideReport d = decide_fields(f, l);
    rec.expect("verdict", d.outcome == DecideReport::Outcome::NotEquivalent && d.reason == "parity",
               "not-equivalent (parity)", std::string(to_string(d.outcome)) + " (" + d.reason + ")");
  });
}

CriterionResult verify_cubic_quadruple() {
  return Recorder(2, "cubic quadruple, disc -3299", 10).run([](Recorder& rec) {
    auto ks = build(reference::cubic_quadruple());
    family_discs(rec, ks, Int(-3299));
    rec.expect("3299 prime", is_prime(Int(3299)), "prime", is_prime(Int(3299)) ? "prime" : "composite");
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = i + 1; j < ks.size(); ++j) {
        EquivalenceVerdict v = decide_theorem_general(ks[i], ks[j]);
        bool ok = v.outcome == EquivalenceVerdict::Outcome::Equivalent && complete_trace(v);
        rec.expect(ks[i].label() + " vs " + ks[j].label(), ok, "equivalent, complete proof trace",
                   std::string(to_string(v.outcome)) + ", " + std::to_string(v.proof_trace.size()) + " steps" +
                       (complete_trace(v) ? "" : " (incomplete)"));
      }
  });
}

CriterionResult verify_quartic_quintic() {
  return Recorder(3, "quartic pair 7537, quintic pair 34129", 10).run([](Recorder& rec) {
    auto quartics = build(reference::quartic_pair());
    family_discs(rec, quartics, Int(7537));
    decide_all_pairs(rec, quartics);
    NumberField printed = NumberField::from_poly(reference::quartic_printed_second(), {}, "x^4+4x^2-5x+2");
    rec.note("printed second quartic " + printed.label(), "disc 7537",
             "disc " + printed.disc().get_str() + "; x^4+5x^2-x+4 (disc 7537) used in its place");
    auto quintics = build(reference::quintic_pair());
    family_discs(rec, quintics, Int(34129));
    decide_all_pairs(rec, quintics);
  });
}

CriterionResult verify_septic() {
  return Recorder(4, "septic pair, disc 2741^2", 60).run([](Recorder& rec) {
    auto ks = build(reference::septic_pair());
    const long p = reference::kSepticPrime;
    family_discs(rec, ks, Int(p) * p);
    for (const auto& k : ks)
      rec.expect(k.label() + " signature", k.signature() == std::make_pair(3, 2), "(3,2)", sig(k.signature()));
    SpectrumComparison below = compare_spectra(ks[0], ks[1], p - 1);
    rec.expect("spectra below 2741", below.consistent, "consistent",
               (below.consistent ? "consistent at " : "inconsistent at ") + std::to_string(below.compared) +
                   " primes");
    SpectrumComparison at = compare_spectra(ks[0], ks[1], p);
    bool split = !at.consistent && at.first && at.first->p == p;
    rec.expect("spectra at 2741", split, "distinguished at 2741",
               at.consistent ? std::string("consistent")
                             : "distinguished at " + at.first->p.get_str() + ": " + at.first->to_string() + " vs " +
                                   at.second->to_string());
    EquivalenceVerdict v = decide_theorem_general(ks[0], ks[1]);
    rec.expect("verdict", v.outcome == EquivalenceVerdict::Outcome::Equivalent && complete_trace(v),
               "equivalent, complete proof trace",
               std::string(to_string(v.outcome)) + ", " + std::to_string(v.proof_trace.size()) + " steps");
  });
}

CriterionResult verify_spinor_triple() {
  return Recorder(5, "totally real quartic triple, disc 151717", 60).run([](Recorder& rec) {
    auto ks = build(reference::spinor_triple());
    family_discs(rec, ks, Int(151717));
    for (const auto& k : ks)
      rec.expect(k.label() + " totally real", k.totally_real(), "(4,0)", sig(k.signature()));
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = i + 1; j < ks.size(); ++j) {
        const std::string pair = ks[i].label() + " vs " + ks[j].label();
        QuadLattice a = trace_gram(ks[i]), b = trace_gram(ks[j]);
        IsometryResult iso = is_isometric(a, b);
        rec.expect(pair + " isometry", !iso.isometric && !iso.separating_invariant.empty(),
                   "not isometric, separating invariant",
                   iso.isometric ? std::string("isometric") : iso.separating_invariant);
        RationalComparison rat = rationally_equivalent(a, b);
        rec.expect(pair + " rational", rat.equivalent, "equivalent", rat.equivalent ? "equivalent" : rat.reason);
        GenusComparison g = same_genus(a, b);
        rec.expect(pair + " genus", g != GenusComparison::Different, "same or undetermined at 2", to_string(g));
      }
    Poly printed = reference::spinor_printed_second();
    rec.note("printed second quartic " + printed.to_string(), "totally real, disc 151717",
             "polynomial disc " + poly_discriminant(printed).get_str() +
                 "; 16x^4-23x^3-18x^2+1 (disc 151717) used in its place");
  });
}

CriterionResult verify_watson() {
  return Recorder(0, "Watson criterion (8, 2^10 3^7 5^7)", 10).run([](Recorder& rec) {
    bool w = watson_spinor_criterion(8, reference::octic_disc());
    rec.expect("watson(8, octic disc)", w, "true", w ? "true" : "false");
  });
}

CriterionResult verify_scan(const std::string& table_path, const ScanOptions& options, std::size_t min_fields) {
  return Recorder(6, "desk-scale quartic scan", 600).run([&](Recorder& rec) {
    FieldTable table = read_field_table(table_path);
    ScanOptions opts = options;
    opts.table_path = table_path;
    ScanReport report = run_scan(table, opts);
    rec.expect("malformed records", report.malformed.empty(), "0", std::to_string(report.malformed.size()));
    rec.expect("flagged records", report.flagged.empty(), "0", std::to_string(report.flagged.size()));
    for (const auto& [label, why] : report.excluded) rec.expect("excluded " + label, false, "kept", why);
    rec.expect("fields", report.fields >= min_fields, ">= " + std::to_string(min_fields),
               std::to_string(report.fields));
    std::size_t expected_pairs = 0;
    for (const auto& [d, labels] : report.groups) expected_pairs += labels.size() * (labels.size() - 1) / 2;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& p : report.pairs) seen.emplace(p.first, p.second);
    rec.expect("pairs", report.pairs.size() == expected_pairs && seen.size() == expected_pairs,
               std::to_string(expected_pairs) + " distinct", std::to_string(seen.size()) + " distinct of " +
                                                                  std::to_string(report.pairs.size()));
    std::size_t candidates = report.count(PairOutcome::EquivalentFormsNonconjugate);
    rec.expect("equivalent-forms-nonconjugate", candidates == 0, "0", std::to_string(candidates));
    for (const auto& p : report.pairs)
      if (p.outcome == PairOutcome::Undetermined)
        rec.expect(p.first + " vs " + p.second, false, "conjugate or distinct-forms", "undetermined: " + p.detail);
    rec.note("outcomes", "", std::to_string(report.count(PairOutcome::Conjugate)) + " conjugate, " +
                                 std::to_string(report.count(PairOutcome::DistinctForms)) + " distinct-forms in " +
                                 std::to_string(report.groups.size()) + " groups");
  });
}

void print_checks(const CriterionResult& r, std::ostream& out) {
  for (const auto& c : r.checks) {
    out << "  " << to_string(c.status) << "  " << c.fixture;
    if (!c.expected.empty()) out << "  expected: " << c.expected;
    out << "  computed: " << c.computed << "\n";
  }
  out << "  time " << std::fixed << std::setprecision(2) << r.seconds << " s (budget " << std::setprecision(0)
      << r.budget_seconds << " s)\n"
      << std::defaultfloat;
}

}  // namespace traceform::cli
