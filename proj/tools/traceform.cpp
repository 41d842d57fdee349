#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "commands.hpp"
#include "poly_parser.hpp"

using namespace traceform;
using namespace traceform::cli;

int main(int argc, char** argv) {
  CLI::App app{"Integral trace forms of number fields: invariants, equivalence decisions and discriminant scans"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::string max_disc, fundamental = "quadratic-style";
  app.add_option("--seed", g.seed, "seed for randomized factorization")->capture_default_str();
  app.add_option("--effort", g.effort, "budget multiplier for searches and precision")
      ->check(CLI::Range(1, 1000))
      ->capture_default_str();
  app.add_option("--max-disc", max_disc, "scan bound on |disc| (default per degree)");
  app.add_option("--fundamental", fundamental, "fundamental discriminant convention")
      ->check(CLI::IsMember({"quadratic-style", "strict-squarefree"}))
      ->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for scan")->check(CLI::Range(1u, 1024u));
  app.add_option("--cache", g.cache_path, "field cache file for scan");
  g.jobs = std::max(1u, std::thread::hardware_concurrency());

  std::string f, l;
  auto* inv = app.add_subcommand("invariants", "discriminant, signature, index, tameness and Gram determinants");
  inv->add_option("polynomial", f, "expression such as x^3+2*x+11, or coefficients c0,...,cn")->required();

  auto* decide = app.add_subcommand("decide", "decide integral equivalence of two trace forms");
  decide->add_option("f", f)->required();
  decide->add_option("g", l)->required();

  auto* tz = app.add_subcommand("tz-isometric", "isometry of trace-zero forms of totally real fields");
  tz->add_option("f", f)->required();
  tz->add_option("g", l)->required();

  std::uint32_t bound = 1000;
  auto* spectra = app.add_subcommand("spectra", "compare splitting types up to a bound");
  spectra->add_option("f", f)->required();
  spectra->add_option("g", l)->required();
  spectra->add_option("--bound", bound, "largest prime compared")->capture_default_str();

  ScanCommand scan_cmd;
  bool no_filter = false;
  auto* scan = app.add_subcommand("scan", "group a field table by discriminant and classify every pair");
  scan->add_option("table", scan_cmd.table_path, "field table")->required();
  scan->add_option("-o,--report", scan_cmd.report_path, "write the report here and print a summary");
  scan->add_flag("--no-filter", no_filter, "keep fields regardless of discriminant bound and fundamentality");
  scan->add_flag("--require-tame", scan_cmd.require_tame, "also drop wildly ramified fields");

  VerifyCommand verify_cmd;
  auto* verify = app.add_subcommand("verify-paper", "reproduce the reference example fields");
  verify->add_option("--table", verify_cmd.table_path, "also scan this quartic fixture table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (!max_disc.empty()) g.max_disc = parse_integer(max_disc);
    g.fundamental =
        fundamental == "strict-squarefree" ? FundamentalMode::StrictSquarefree : FundamentalMode::QuadraticStyle;
    if (*inv) return cmd_invariants(f, g, std::cout);
    if (*decide) return cmd_decide(f, l, g, std::cout);
    if (*tz) return cmd_tz_isometric(f, l, g, std::cout);
    if (*spectra) return cmd_spectra(f, l, bound, g, std::cout);
    if (*scan) {
      scan_cmd.filter = !no_filter;
      return cmd_scan(scan_cmd, g, std::cout);
    }
    if (*verify) return cmd_verify_paper(verify_cmd, g, std::cout);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e);
  }
  return kExitOk;
}
