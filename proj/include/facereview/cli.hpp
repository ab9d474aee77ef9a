#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace facereview::cli {

/// Entry point behind the `facereview` executable. `args` excludes the
/// program name. Data goes to `out`, diagnostics to `err`; returns the
/// process exit code (0 on success).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace facereview::cli
