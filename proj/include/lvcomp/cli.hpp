#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lvcomp {

enum ExitCode : int { kExitOk = 0, kExitInputError = 2, kExitComputeError = 3 };

/// Runs one command line; args excludes the program name. Output goes to
/// out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lvcomp
