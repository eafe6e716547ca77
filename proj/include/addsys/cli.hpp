#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace addsys::cli {

/// Dispatch a command line.  Exit codes: 0 success / property holds,
/// 1 mathematical negative (counterexample, decomposable, not a number
/// system contraction), 2 usage or document error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addsys::cli
