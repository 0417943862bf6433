#pragma once

#include <ostream>
#include <span>
#include <string>

namespace suitescore {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitInternalError = 2 };

// Runs one subcommand: boost, standardize, radar, improve, plan, analyze or
// report. `args` excludes the program name. Human-readable output goes to
// `out`, diagnostics to `err`; files only where an --out style flag names
// them.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace suitescore
