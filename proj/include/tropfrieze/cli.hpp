#pragma once

#include <ostream>

namespace tropfrieze {

// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitInvalidInput = 2,
    kExitBudget = 3,
    kExitRouteDisagreement = 4,
    kExitInternal = 5,
};

// Runs one command line; results go to out, JSON diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropfrieze
