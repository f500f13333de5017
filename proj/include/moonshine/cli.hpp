#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace moonshine::cli {

// Parses and runs one command. Results go to `out`, diagnostics to
// `err`. Exit code: 0 verified/success, 1 identity failed, 2 usage or
// precondition error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moonshine::cli
