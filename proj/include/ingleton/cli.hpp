#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ingleton::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kTheorem = 3 };

/// Runs one command line (program name excluded). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ingleton::cli
