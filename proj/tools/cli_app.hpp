#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace barnes::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kAccuracy = 3 };

/// Runs one command line (args excludes the program name).  Rows go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barnes::cli
