#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gammapos/report.hpp"

namespace gammapos::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

enum class Format { kText, kJson, kCsv };

/// Parses `args` (without the program name) and executes the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteEntry {
  std::string group;
  std::function<Report()> check;
};

/// Every verification across its documented range, capped at max_n, in
/// registry order. max_n = 0 yields no entries.
std::vector<SuiteEntry> suite_registry(int max_n);

/// Runs the registry and prints one line per check; exit 0 iff all pass.
int run_suite(int max_n, Format format, std::ostream& out, std::ostream& err);

}  // namespace gammapos::cli
