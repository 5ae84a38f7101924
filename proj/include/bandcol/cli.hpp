#pragma once

#include <ostream>

namespace bandcol {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_unsolved = 2,  // infeasible, timeout, or a check that found violations
    exit_internal = 3,
};

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bandcol
