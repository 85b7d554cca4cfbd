#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pathgraph {

/// Runs the command line front end on `args` (without the program name).
/// Returns the process exit code: 0 accept / pass, 1 reject / fail,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathgraph
