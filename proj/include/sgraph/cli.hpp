#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgraph::cli {

// Runs one command line (args excludes the program name). Returns the exit
// code: 0 when the run report passes, 1 when it fails, 2 on errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgraph::cli
