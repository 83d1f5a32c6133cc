#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tqft::cli {

// Exit codes.
enum Exit : int {
    ok = 0,
    check_failed = 1,
    usage = 2,
    too_large = 3,
    unwritable = 4,
    degenerate = 5,
    non_real = 6,
};

// Runs the command line `tqft <args...>` (program name excluded) writing to the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tqft::cli
