#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eikon::cli {

// Runs one command line (args excludes the program name). Returns the process
// exit code: 0 success, 1 failed verification, 2 bad arguments, scene or
// library error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eikon::cli
