#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphfair::tools {

// Full command line entry point. Returns the process exit code: 0 on success
// (or a passing check), 1 when a check or goal fails, 2 on malformed input,
// 3 when an internal guarantee is violated (a defect, not a user error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphfair::tools
