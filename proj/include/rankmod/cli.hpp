#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankmod {

// Runs one CLI invocation (args exclude the program name) and returns the
// process exit code: 0 success, 1 usage error, 2 verification failure,
// 3 resource cap exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rankmod
