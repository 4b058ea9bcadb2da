#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gooddecomp {

/// Runs one CLI invocation; `args` excludes the program name.
/// Exit codes: 0 success, 1 reasoned refusal (a "reason: ..." line is
/// printed), 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gooddecomp
