#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ucycle {

// Full command-line surface, factored out of main() so tests can drive it.
// Exit codes: 0 success/pass; 1 for informative negatives (verification
// failure, no cycle exists, unreachable vertex); 2 for usage, contract, or
// budget errors.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace ucycle
