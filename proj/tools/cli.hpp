#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scissors::cli {

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 contract/structural/resource error, 2 parse or usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace scissors::cli
