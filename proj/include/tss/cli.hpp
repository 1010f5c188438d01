#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tss {

/// Runs one CLI invocation. `args` excludes the program name. JSON goes to
/// `out` on every exit path; human diagnostics go to `err`.
/// Exit codes: 0 success (decision outcomes are data), 1 domain errors
/// (validation failures, uncataloged leaves, size guards), 2 usage and parse
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tss
