#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stablerep {

// Runs one CLI invocation; returns the process exit status.
// 0 = success, 1 = computational error (JSON on err), 2 = usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stablerep
