#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krein::cli {

/// Runs the command line `args` (program name excluded).
/// Returns 0 on success, 1 on validation errors, 2 on numerical or
/// certification failures. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace krein::cli
