#pragma once

#include <ostream>

namespace gwitt::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// Entry point of the `gwitt` tool. Structured output goes to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gwitt::cli
