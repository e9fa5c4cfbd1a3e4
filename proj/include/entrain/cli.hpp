#pragma once

#include <iosfwd>

#include "entrain/config.hpp"

namespace entrain::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNumericError = 2 };

/// Dispatches one subcommand. Data goes to cfg.output ("-" for `out`),
/// written atomically when it is a file; the one-line summary goes to `out`
/// unless data is already being streamed there, in which case it goes to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line entry point: parses flags, merges --config, runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace entrain::cli
