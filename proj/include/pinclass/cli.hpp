#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pinclass {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 2 invalid input, 3 enumeration budget exhausted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pinclass
