#pragma once

// Command implementations behind the traceform executable. Each writes its
// report to `out` and returns the process exit code; library errors
// propagate and are mapped by exit_code().

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "scan.hpp"

namespace traceform::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitIrreducibilityUndetermined = 3,
  kExitUndetermined = 4,
  kExitPrecondition = 5,
  kExitFixtureMismatch = 6,
};

int exit_code(const Error& e) noexcept;

struct GlobalOptions {
  std::uint64_t seed = kDefaultSeed;
  int effort = 1;
  std::optional<Int> max_disc;
  FundamentalMode fundamental = FundamentalMode::QuadraticStyle;
  unsigned jobs = 1;
  std::string cache_path;

  Effort effort_level() const { return Effort{effort}; }
};

/// Field from a polynomial expression or coefficient list, labelled by the text.
NumberField field_from_text(const std::string& text, const GlobalOptions& g);

int cmd_invariants(const std::string& poly, const GlobalOptions& g, std::ostream& out);
int cmd_decide(const std::string& f, const std::string& l, const GlobalOptions& g, std::ostream& out);
int cmd_tz_isometric(const std::string& f, const std::string& l, const GlobalOptions& g, std::ostream& out);
int cmd_spectra(const std::string& f, const std::string& l, std::uint32_t bound, const GlobalOptions& g,
                std::ostream& out);

struct ScanCommand {
  std::string table_path;
  std::string report_path;  // empty: report to out, summary omitted
  bool filter = true;
  bool require_tame = false;
};
int cmd_scan(const ScanCommand& cmd, const GlobalOptions& g, std::ostream& out);

struct VerifyCommand {
  std::string table_path;  // empty: skip the scan fixture
};
int cmd_verify_paper(const VerifyCommand& cmd, const GlobalOptions& g, std::ostream& out);

}  // namespace traceform::cli
