#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace laguerre {

/// Runs the command line (args excludes the program name). Exit codes: 0 all
/// checks pass or report only, 1 some check fails, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laguerre
