#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace saf::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kInputError = 2,
    kPropertyViolation = 3,
};

/// Runs one command line. `args[0]` is the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace saf::cli
