#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptri::cli {

enum ExitCode : int { ok = 0, check_failed = 1, input_error = 2, internal_error = 3 };

/// args excludes the program name. Reports go to out, usage problems to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptri::cli
