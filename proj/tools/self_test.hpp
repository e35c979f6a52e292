#pragma once

#include <ostream>

namespace fracgrad::tools {

/// Runs the built-in sanity checks, printing one line per check. Returns the
/// number of failed checks.
int run_self_test(std::ostream& out);

}  // namespace fracgrad::tools
