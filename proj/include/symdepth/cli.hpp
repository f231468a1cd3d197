#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symdepth {

// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_input_error = 2,
    exit_cross_check = 3,
    exit_budget = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdepth
