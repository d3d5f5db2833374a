#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schmidt::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schmidt::cli
