#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "monodromy/serialize.hpp"

namespace monodromy::cli {

enum ExitCode : int { ok = 0, usage = 1, verification_failed = 2, io_error = 3 };

/// Every option of every subcommand; echoed into each report.
struct RunConfig {
  std::string command;
  int n = 12;
  int box = 5;
  std::string format = "text";
  std::string out;
  int jobs = 1;
  std::string suite = "all";
  std::string case_name = "6";
  std::vector<std::string> fix;
  int range = 8;
  bool log_discrepancies = false;
  std::string what;
  std::string action;
  std::string moves;
  std::string input;

  Json to_json() const;
  std::string summary() const;
};

int cmd_classify(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_export(const RunConfig& cfg, std::ostream& out);
int cmd_hurwitz(const RunConfig& cfg, std::ostream& out);

/// Parses argv and dispatches. Reports go to `out` unless --out names a
/// file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The SVG drawing of the three norm conics with their lattice points.
std::string conics_svg();

/// Named built-in tuples accepted by --input: "standard:N", "period3:N",
/// "eta12". Anything else is read as a JSON file.
Factorization load_tuple(const std::string& source);

}  // namespace monodromy::cli
