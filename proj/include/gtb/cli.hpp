#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gtb::cli {

/// Runs one command line (without the program name).
/// Exit codes: 0 success, 1 a checked law failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtb::cli
