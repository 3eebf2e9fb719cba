#ifndef FFARANK_CLI_H_
#define FFARANK_CLI_H_

#include <iosfwd>

namespace ffarank {

// Entry point of the `ffarank` tool: subcommands replay, validate, synth.
// Returns the process exit status.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffarank

#endif  // FFARANK_CLI_H_
