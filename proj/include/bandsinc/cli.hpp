#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bandsinc::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,      // unreadable input, malformed CSV, bad flags
  kDomainError = 2,  // geometry or node validation
  kNumericError = 3, // quadrature, vanishing factors, calibration
  kSelftestFailed = 4,
};

/// Runs one invocation; `args` excludes the program name. CSV output goes to
/// `out` unless --out is given, diagnostics always go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Oracle-equivalence checks, one PASS/FAIL line each. Returns true if all pass.
bool selftest(std::ostream& out);

}  // namespace bandsinc::cli
