#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "faa/check.hpp"

namespace faa::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_disagreement = 3;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// As above, with the route table used by `check` and `derive --method all`
/// replaced.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::vector<Route>& routes);

} // namespace faa::cli
