#pragma once

#include <ostream>

namespace signet {

// Cross-checks the production implementations against the dense brute-force
// oracles and the analytic fixed points, one line of output per check.
// Returns the number of failures (0 = healthy build).
int run_self_check(std::ostream& log);

}  // namespace signet
