#pragma once
// Command-line surface: train / tune / evaluate / predict / synth /
// boundary / entropy subcommands over the library.

#include <string>
#include <vector>

namespace chaoscomp {

// Returns the process exit code: 0 on success, 2 on a usage error (unknown
// subcommand or flag), 1 on any runtime failure. All randomness is
// controlled by the --seed flag.
int cli_dispatch(const std::vector<std::string>& args);
int cli_dispatch(int argc, const char* const* argv);

}  // namespace chaoscomp
