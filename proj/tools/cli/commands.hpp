#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jordanum::cli {

// Runs the command line (args exclude the program name). Returns the exit
// code: 0 success, 2 verify mismatch, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jordanum::cli
