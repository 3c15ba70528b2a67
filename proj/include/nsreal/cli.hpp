// Command-line front end. Exit codes: 0 success, 2 usage, 3 undetermined or
// unknown convergence, 4 exhausted search, 1 anything else.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nsreal::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsreal::cli
