#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcg {

// Runs the command-line surface. Returns the process exit code:
// 0 success, 2 usage error, 3 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gcg
