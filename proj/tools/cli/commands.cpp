#include "commands.hpp"

#include <fstream>
#include <ostream>

#include "decide.hpp"
#include "poly_parser.hpp"
#include "traceform/arith_equivalence.hpp"
#include "traceform/trace_forms.hpp"
#include "verify.hpp"

namespace traceform::cli {

int exit_code(const Error& e) noexcept {
  switch (e.kind()) {
    case ErrorKind::Parse: return kExitParse;
    case ErrorKind::IrreducibilityUndetermined: return kExitIrreducibilityUndetermined;
    case ErrorKind::SearchExhausted:
    case ErrorKind::FactorizationTimeout: return kExitUndetermined;
    default: return kExitPrecondition;
  }
}

NumberField field_from_text(const std::string& text, const GlobalOptions& g) {
  NumberFieldOptions opts;
  opts.seed = g.seed;
  return NumberField::from_poly(parse_polynomial(text), opts, text);
}

namespace {

std::string sig(std::pair<int, int> s) { return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")"; }

void field_line(const NumberField& k, std::ostream& out) {
  out << k.label() << ": degree " << k.degree() << ", disc " << k.disc() << ", signature " << sig(k.signature())
      << "\n";
}

void print_steps(const std::vector<ProofStep>& steps, std::ostream& out) {
  for (const auto& s : steps)
    out << "  [" << (s.holds ? "ok" : "fails") << "] " << s.step << ": " << s.criterion
        << (s.detail.empty() ? "" : " (" + s.detail + ")") << "\n";
}

}  // namespace

int cmd_invariants(const std::string& poly, const GlobalOptions& g, std::ostream& out) {
  NumberField k = field_from_text(poly, g);
  out << "polynomial     " << k.defining_poly().to_string() << "\n";
  if (k.scale() != 1) out << "monic model    " << k.min_poly().to_string() << "\n";
  out << "degree         " << k.degree() << "\n"
      << "disc           " << k.disc() << " = " << k.disc_factorization().to_string() << "\n"
      << "signature      " << sig(k.signature()) << "\n"
      << "poly disc      " << k.poly_disc() << "\n"
      << "index          " << k.index() << "\n";
  for (const Int& p : k.disc_factorization().primes())
    out << "ramified       " << p << " (" << to_string(is_tame_at(k, p)) << ")\n";
  QuadLattice t = trace_gram(k);
  out << "trace det      " << t.det() << "\n";
  if (k.degree() >= 2) out << "trace-zero det " << trace_zero_gram(k).det() << "\n";
  return kExitOk;
}

int cmd_decide(const std::string& f, const std::string& l, const GlobalOptions& g, std::ostream& out) {
  NumberField a = field_from_text(f, g), b = field_from_text(l, g);
  field_line(a, out);
  field_line(b, out);
  DecideReport r = decide_fields(a, b, g.effort_level());
  out << "general pipeline: " << to_string(r.general.outcome)
      << (r.general.reason.empty() ? "" : " (" + r.general.reason + ")") << "\n";
  print_steps(r.general.proof_trace, out);
  if (!r.invariants.empty()) {
    out << "invariant checks:\n";
    print_steps(r.invariants, out);
  }
  if (r.isometry && r.isometry->witness) out << "isometry witness:\n" << *r.isometry->witness << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  out << "verdict: " << to_string(r.outcome) << " (" << r.reason << ")\n";
  return r.outcome == DecideReport::Outcome::Undetermined ? kExitUndetermined : kExitOk;
}

int cmd_tz_isometric(const std::string& f, const std::string& l, const GlobalOptions& g, std::ostream& out) {
  NumberField a = field_from_text(f, g), b = field_from_text(l, g);
  for (const auto* k : {&a, &b})
    if (!k->totally_real() || k->degree() < 2)
      throw Error(ErrorKind::InvalidArgument, k->label() + " is not a totally real field of degree >= 2, so its "
                                                            "trace-zero form is not definite; use decide");
  QuadLattice za = trace_zero_gram(a), zb = trace_zero_gram(b);
  out << a.label() << " trace-zero Gram:\n" << za.gram() << "\n" << b.label() << " trace-zero Gram:\n" << zb.gram()
      << "\n";
  IsometryResult r = is_isometric(za, zb, g.effort_level().isometry());
  if (r.isometric) {
    out << "isometric: yes (" << r.nodes << " nodes)\nwitness U with U^T G1 U = G2:\n" << *r.witness << "\n";
  } else {
    out << "isometric: no (" << r.separating_invariant << ")\n";
  }
  return kExitOk;
}

int cmd_spectra(const std::string& f, const std::string& l, std::uint32_t bound, const GlobalOptions& g,
                std::ostream& out) {
  NumberField a = field_from_text(f, g), b = field_from_text(l, g);
  SplitSpectrum sa = splitting_spectrum(a, bound), sb = splitting_spectrum(b, bound);
  SpectrumComparison c = compare_spectra(sa, sb);
  for (const auto* s : {&sa, &sb})
    for (const auto& [p, why] : s->excluded) out << "excluded " << p << " for " << s->field_label << ": " << why << "\n";
  out << "primes compared " << c.compared << " (bound " << bound << ")\n";
  if (c.consistent) {
    out << "consistent\n";
  } else {
    out << "distinguished at " << c.first->p << "\n"
        << "  " << a.label() << ": " << c.first->to_string() << "\n"
        << "  " << b.label() << ": " << c.second->to_string() << "\n";
  }
  return kExitOk;
}

int cmd_scan(const ScanCommand& cmd, const GlobalOptions& g, std::ostream& out) {
  FieldTable table = read_field_table(cmd.table_path);
  ScanOptions opts;
  opts.fundamental = g.fundamental;
  opts.filter = cmd.filter;
  opts.require_tame = cmd.require_tame;
  opts.max_disc = g.max_disc;
  opts.jobs = g.jobs;
  opts.seed = g.seed;
  opts.effort = g.effort_level();
  opts.cache_path = g.cache_path;
  opts.table_path = cmd.table_path;
  ScanReport report = run_scan(table, opts);
  if (cmd.report_path.empty()) {
    write_report(report, out);
    return kExitOk;
  }
  std::ofstream file(cmd.report_path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + cmd.report_path);
  write_report(report, file);
  write_summary(report, out);
  return kExitOk;
}

int cmd_verify_paper(const VerifyCommand& cmd, const GlobalOptions& g, std::ostream& out) {
  std::vector<CriterionResult> results{verify_octic(), verify_cubic_quadruple(), verify_quartic_quintic(),
                                       verify_septic(), verify_spinor_triple(), verify_watson()};
  if (!cmd.table_path.empty()) {
    ScanOptions opts;
    opts.fundamental = g.fundamental;
    opts.max_disc = g.max_disc;
    opts.jobs = g.jobs;
    opts.seed = g.seed;
    opts.effort = g.effort_level();
    opts.cache_path = g.cache_path;
    results.push_back(verify_scan(cmd.table_path, opts));
  }
  bool ok = true;
  for (const auto& r : results) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << "\n";
    print_checks(r, out);
    ok = ok && r.passed();
  }
  return ok ? kExitOk : kExitFixtureMismatch;
}

}  // namespace traceform::cli
