#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistvol::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitOutOfRegime = 2,
    kExitCheckFailed = 3,
    kExitNumerical = 4,
};

/// Runs one command line (args excludes the program name) and returns the
/// process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace twistvol::cli
