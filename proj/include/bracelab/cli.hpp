#pragma once

// The bracelab command line. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or structural error.

#include <iosfwd>
#include <string>
#include <vector>

namespace bracelab {

/// args excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace bracelab
