#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sturmkit::cli {

// Parses and executes one command line (without the program name).
// Returns the process exit code: 0 success, 1 verification failure,
// 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sturmkit::cli
