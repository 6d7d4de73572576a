// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bethe::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInvalidArguments = 1,
    kNotConvergedOrCapExceeded = 2,
    kVerificationFailed = 3,
};

/**
 * Runs one command line (args excludes the program name). Reports go to
 * `out`, diagnostics to `err`. Subcommands: solve, partition,
 * verify-identities, spectrum.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bethe::cli
