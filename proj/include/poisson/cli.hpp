#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace poisson::cli {

// Dispatches one command line (without the program name). Exit codes:
// 0 success, 1 mathematical negative (not isomorphic, Jacobi failure, not a
// member, ...), 2 input or usage error. Output bytes are deterministic for
// identical inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poisson::cli
