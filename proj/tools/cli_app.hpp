#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqtile::cli {

// Full command dispatch, separated from main() so tests can drive it.
// Exit codes: 0 success/feasible/verified, 1 infeasible/failed/counterexample,
// 2 usage or I/O error, 3 node budget exhausted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sqtile::cli
