#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace intcay::cli {

/// Runs one command; `args` excludes the program name. Returns the exit code:
/// 0 success, 1 bad input or failed precondition, 2 internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace intcay::cli
