#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rfps::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_fails = 1,
    exit_input = 2,
};

// Runs one command line (without the program name). Results go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rfps::cli
