#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kkdrop {

// Dispatches one CLI invocation.  Returns 0 on success, 1 on usage or
// precondition errors, 2 when an internal invariant fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kkdrop
