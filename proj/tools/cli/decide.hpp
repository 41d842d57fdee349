#pragma once

// Equivalence decision for two fields' integral trace forms: the general
// single-tame-prime pipeline, then isometry testing for definite forms and a
// chain of integral invariants when the pipeline's hypotheses fail.

#include <optional>
#include <string>
#include <vector>

#include "scan.hpp"
#include "traceform/lattice_isometry.hpp"
#include "traceform/quadratic_invariants.hpp"

namespace traceform::cli {

struct DecideReport {
  enum class Outcome { Equivalent, NotEquivalent, Undetermined };
  Outcome outcome = Outcome::Undetermined;
  std::string reason;
  EquivalenceVerdict general;          // result of the general pipeline
  std::vector<ProofStep> invariants;   // invariant checks run afterwards
  std::optional<IsometryResult> isometry;
  std::vector<std::string> notes;
};

const char* to_string(DecideReport::Outcome o) noexcept;

DecideReport decide_fields(const NumberField& f, const NumberField& l, const Effort& effort = {});

}  // namespace traceform::cli
