#pragma once

// Command-line front end.  Exit codes: 0 success, 1 a verification check
// failed, 2 usage or parse error (usage text goes to `err`).

#include <ostream>
#include <string>
#include <vector>

namespace levelone {

/// `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levelone
