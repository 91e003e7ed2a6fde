#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steinlab::cli {

/// Exit codes: 0 success, 1 domain error, 2 malformed input or usage.
enum ExitCode : int { kOk = 0, kDomainError = 1, kInputError = 2 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steinlab::cli
