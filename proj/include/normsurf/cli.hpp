#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normsurf {

/// Command line driver. Returns the process exit code: 0 on success, 1 on
/// input errors, 2 on invariant or reproduction failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace normsurf
