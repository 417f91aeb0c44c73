#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weyl::cli {

enum ExitStatus : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kInternal = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics, warnings and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weyl::cli
