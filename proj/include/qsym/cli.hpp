#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsym {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_disagreement = 1,
    exit_parse = 2,
    exit_precondition = 3,
    exit_term_limit = 4,
};

/// Runs the tool on args (without the program name).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qsym
