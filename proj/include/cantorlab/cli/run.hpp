#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cantorlab::cli {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. Reports go to --out when given,
/// otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantorlab::cli
