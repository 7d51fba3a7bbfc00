#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fisherq::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailure = 1,
  kUsageError = 2,
  kConvergenceError = 3,
};

/// Comma-separated list of non-negative reals. Throws DomainError on an
/// empty list, an unparsable entry or a negative value.
std::vector<double> parse_lambda_list(std::string_view text);

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fisherq::cli
