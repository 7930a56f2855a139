#pragma once

namespace steinhaus {

/// Command-line entry point: subcommands measure, digits, normality,
/// montecarlo, demo. Returns 0 on success, 1 on domain errors (message on
/// stderr), 2 on usage errors.
int cli_main(int argc, const char* const* argv);

}  // namespace steinhaus
