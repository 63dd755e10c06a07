#pragma once

#include <ostream>

#include "dualpoly/json_io.hpp"

namespace dualpoly::cli {

inline constexpr const char* kToolName = "approxdeg";
inline constexpr const char* kVersion = "0.1.0";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kViolated = 3;

/// Runs one invocation. Reports go to --out (or $APPROXDEG_OUT_DIR/<command>.<ext>,
/// or `out` when neither is set); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Machine-readable description of every command and its flags.
Json command_schema();

}  // namespace dualpoly::cli
