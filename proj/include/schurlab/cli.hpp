#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurlab {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // identity mismatch, PSD violation, failed check
inline constexpr int kExitUsage = 2;     // malformed input, bound exceeded, undecidable profile

/// Runs one command line (without the program name). Human-readable text
/// goes to `out`, diagnostics to `err`; `--json -` sends the JSON report to
/// `out` instead of the text.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurlab
