#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilpotent::cli {

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 on success, 2 for malformed input or flags, 3 for domain errors.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace nilpotent::cli
