#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagram::cli {

/// Runs one command line (without the program name). Returns the process exit code:
/// 0 success, 1 usage error, 2 invalid input, 3 domain error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace diagram::cli
