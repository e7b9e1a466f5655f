#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace steklov::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kConfigError = 2,     // configuration, parse, domain and usage errors
  kNumericalError = 3,  // singular A, poles, eigensolver failure
  kBracketError = 4,    // estimation target outside the bracketed range
};

/// Runs one command line (without the program name). Results go to `out`
/// unless the configuration names an output path; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steklov::cli
