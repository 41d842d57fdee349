#include "decide.hpp"

#include "traceform/trace_forms.hpp"

namespace traceform::cli {

const char* to_string(DecideReport::Outcome o) noexcept {
  switch (o) {
    case DecideReport::Outcome::Equivalent: return "equivalent";
    case DecideReport::Outcome::NotEquivalent: return "not-equivalent";
    case DecideReport::Outcome::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

using Outcome = DecideReport::Outcome;

// Records a check; returns false when it separates the forms.
bool check(DecideReport& r, std::string step, std::string criterion, bool holds, std::string detail) {
  r.invariants.push_back({step, std::move(criterion), holds, std::move(detail)});
  if (!holds) {
    r.outcome = Outcome::NotEquivalent;
    r.reason = std::move(step);
  }
  return holds;
}

std::string sig_str(std::pair<int, int> s) {
  return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

}  // namespace

DecideReport decide_fields(const NumberField& f, const NumberField& l, const Effort& effort) {
  DecideReport r;
  r.general = decide_theorem_general(f, l);
  using G = EquivalenceVerdict::Outcome;
  const bool definite = f.totally_real() && l.totally_real() && f.degree() == l.degree();
  if (r.general.outcome == G::Equivalent || r.general.outcome == G::NotEquivalent) {
    r.outcome = r.general.outcome == G::Equivalent ? Outcome::Equivalent : Outcome::NotEquivalent;
    r.reason = r.general.reason.empty() && !r.general.proof_trace.empty() ? r.general.proof_trace.back().step
                                                                          : r.general.reason;
    if (!definite) return r;
  }
  if (r.general.outcome == G::SameSpinorGenus) r.notes.push_back("same spinor genus: " + r.general.reason);

  QuadLattice a = trace_gram(f), b = trace_gram(l);
  if (!check(r, "degree", "equal rank", f.degree() == l.degree(),
             std::to_string(f.degree()) + " vs " + std::to_string(l.degree())))
    return r;
  if (!check(r, "discriminant", "equal Gram determinant", a.det() == b.det(),
             a.det().get_str() + " vs " + b.det().get_str()))
    return r;
  auto sa = form_signature(a), sb = form_signature(b);
  if (!check(r, "signature", "equal inertia", sa == sb, sig_str(sa) + " vs " + sig_str(sb))) return r;
  bool ea = gram_mod(a, Int(2)).is_zero, eb = gram_mod(b, Int(2)).is_zero;
  if (!check(r, "parity", "Gram matrix mod 2 zero for both or neither", ea == eb,
             std::string(ea ? "zero" : "nonzero") + " vs " + (eb ? "zero" : "nonzero")))
    return r;
  RationalComparison rat = rationally_equivalent(a, b);
  if (!check(r, "rational", "equal Hasse invariants", rat.equivalent, rat.equivalent ? "equal" : rat.reason))
    return r;
  GenusComparison genus = same_genus(a, b);
  if (!check(r, "genus", "Jordan decompositions agree", genus != GenusComparison::Different, to_string(genus)))
    return r;

  if (definite) {
    r.isometry = is_isometric(a, b, effort.isometry());
    bool iso = r.isometry->isometric;
    r.invariants.push_back({"isometry", "isometry search on definite forms", iso,
                            iso ? "witness found and verified" : "separated by " + r.isometry->separating_invariant});
    if (r.outcome == Outcome::Undetermined ||
        (r.outcome == Outcome::Equivalent) != iso) {
      r.outcome = iso ? Outcome::Equivalent : Outcome::NotEquivalent;
      r.reason = iso ? "isometric" : "isometry search: " + r.isometry->separating_invariant;
    }
    return r;
  }
  if (r.outcome != Outcome::Undetermined) return r;
  const bool indefinite = sa.first > 0 && sa.second > 0;
  if (indefinite && f.degree() >= 3 && genus == GenusComparison::Same &&
      watson_spinor_criterion(f.degree(), f.disc())) {
    r.invariants.push_back({"eichler", "indefinite, rank >= 3, genus equals spinor genus", true,
                            "same genus and Watson criterion holds"});
    r.outcome = Outcome::Equivalent;
    r.reason = "eichler";
    return r;
  }
  r.reason = "invariants agree; " + std::string(genus == GenusComparison::UndeterminedAt2
                                                    ? "genus undetermined at 2"
                                                    : "spinor genus not settled");
  return r;
}

}  // namespace traceform::cli
