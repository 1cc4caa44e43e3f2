#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgsearch::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // counterexample, NotHypergeometric, undefined value
  kUsage = 2,
  kIo = 3,
  kInterrupted = 130,
};

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Installs a SIGINT handler that asks a running search to stop cleanly.
void install_interrupt_handler();

}  // namespace hgsearch::cli
