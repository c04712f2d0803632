#pragma once

#include "cli_support.hpp"

namespace gasolve::cli {

// Each command returns the process exit code: 0 success, 1 domain-level
// negative (verify unsatisfied, trace mismatch). Usage errors (2) and
// runtime errors (3) surface as exceptions mapped in main().

int cmd_solve(const RunSpec& spec);
int cmd_replay(const RunSpec& spec);
int cmd_sweep(const RunSpec& spec);
int cmd_verify(const RunSpec& spec);
int cmd_enumerate(const RunSpec& spec);

} // namespace gasolve::cli
