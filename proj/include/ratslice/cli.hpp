#pragma once

#include <iosfwd>

#include "ratslice/run_config.hpp"

namespace ratslice {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Entry point of the `ratslice` tool; subcommands slice, dynplane, cubic,
/// reproduce, run and figures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Renders one config and writes the image, the optional CSV and the
/// provenance sidecar "<out>.cfg". Returns an exit code.
int execute_run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ratslice
