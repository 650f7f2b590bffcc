#pragma once

#include <iosfwd>

#include "qcoord/error.hpp"
#include "qcoord/signals/signals.hpp"

namespace qcoord::cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitValidation = 4,
  kExitPayoffDependsOnPsi = 5,
  kExitNotDisjoint = 6,
  kExitNonBinaryActions = 7,
  kExitNotStateConsistent = 8,
  kExitIo = 9,
  kExitOther = 10,
};

int exit_code_for(ErrorKind kind);

/// Runs the command line `argv[0..argc)`, writing the report to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// p(s, t, phi, psi) for the singlet measured at the coordination game's
/// angles under uniform priors, labelled with the game's labels.
JointSignalDistribution chsh_quantum_distribution();

}  // namespace qcoord::cli
