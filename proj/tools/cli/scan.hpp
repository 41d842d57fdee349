#pragma once

// Discriminant-multiplicity scan: ingest a field table, group fields by
// discriminant and classify every pair within a group by conjugacy and
// trace-zero isometry.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "field_table.hpp"
#include "traceform/lattice_isometry.hpp"
#include "traceform/number_field.hpp"

namespace traceform::cli {

/// Budgets derived from the --effort level (1 = defaults).
struct Effort {
  int level = 1;
  IsometryOptions isometry() const;
  ConjugacyOptions conjugacy(std::uint64_t seed) const;
};

/// Default discriminant bound X_n per degree; nullopt for no bound.
std::optional<Int> default_max_disc(int degree);

struct ScanOptions {
  FundamentalMode fundamental = FundamentalMode::QuadraticStyle;
  bool filter = true;             // keep only fundamental discriminants within the bound
  bool require_tame = false;      // with filter, also drop wildly ramified fields
  std::optional<Int> max_disc;    // |disc| bound; default X_n
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  Effort effort;
  std::string cache_path;         // empty: no cache
  std::string table_path;         // echoed in the report
};

enum class PairOutcome { Conjugate, EquivalentFormsNonconjugate, DistinctForms, Undetermined };
const char* to_string(PairOutcome o) noexcept;

struct PairResult {
  Int disc;
  std::string first, second;
  PairOutcome outcome = PairOutcome::Undetermined;
  std::string conjugacy;  // yes / no / undetermined
  std::string detail;
  std::optional<IntMatrix> witness;  // trace-zero isometry when found
};

/// Conjugacy first; for non-conjugate or undetermined pairs of totally real
/// fields, isometry of the trace-zero forms.
PairResult classify_pair(const NumberField& a, const NumberField& b, const Effort& effort, std::uint64_t seed);

struct ScanReport {
  ScanOptions options;
  std::string version;
  std::string timestamp;
  std::vector<MalformedRecord> malformed;
  std::vector<std::pair<std::string, std::string>> flagged;   // label, reason
  std::vector<std::pair<std::string, std::string>> excluded;  // label, reason
  std::map<Int, std::vector<std::string>> groups;             // multiplicity >= 2
  std::size_t fields = 0;                                     // built and passing the filters
  std::size_t singletons = 0;
  std::size_t cache_hits = 0;
  std::vector<PairResult> pairs;                              // ordered by (disc, label, label)

  std::size_t count(PairOutcome o) const;
};

ScanReport run_scan(const FieldTable& table, const ScanOptions& options);

/// One JSON object per line: config, malformed, flagged, excluded, group,
/// pair, summary records, in that order. Keys appear in a fixed order.
void write_report(const ScanReport& report, std::ostream& out);
void write_summary(const ScanReport& report, std::ostream& out);

}  // namespace traceform::cli
