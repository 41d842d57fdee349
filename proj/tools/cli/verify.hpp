#pragma once

// Reproduction checks for the reference example fields and the desk-scale
// quartic scan. Shared by the verify-paper command and the acceptance suite.

#include <string>
#include <vector>

#include "scan.hpp"

namespace traceform::cli {

struct FixtureCheck {
  enum class Status { Pass, Fail, Note };
  std::string fixture;
  Status status = Status::Pass;
  std::string expected;
  std::string computed;
};

const char* to_string(FixtureCheck::Status s) noexcept;

struct CriterionResult {
  int id = 0;
  std::string name;
  double budget_seconds = 0;
  double seconds = 0;
  std::vector<FixtureCheck> checks;

  /// No failing check and within the time budget.
  bool passed() const;
};

CriterionResult verify_octic();
CriterionResult verify_cubic_quadruple();
CriterionResult verify_quartic_quintic();
CriterionResult verify_septic();
CriterionResult verify_spinor_triple();
CriterionResult verify_watson();
/// Scan of a quartic fixture table; needs at least min_fields fields.
CriterionResult verify_scan(const std::string& table_path, const ScanOptions& options, std::size_t min_fields = 200);

/// Expected vs computed table, one line per check.
void print_checks(const CriterionResult& r, std::ostream& out);

}  // namespace traceform::cli
