#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abmod {

// Exit codes: 0 verdict produced (including inconclusive), 1 selfcheck
// failure, 2 input error, 3 resource error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace abmod
