#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxforge::cli {

// args excludes the program name. Returns the process exit code: 0 ok,
// 2 bad input, 1 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxforge::cli
