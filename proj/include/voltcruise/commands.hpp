#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace voltcruise::cli {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kFeasible = 0,
    kInputError = 1,
    kInfeasible = 2,
    kVerificationFailure = 3,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace voltcruise::cli
