#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halinstar::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,  // verifier found a violation, or an internal assertion fired
  kRefused = 2,    // precondition not met, or search bound exceeded
  kIoError = 3,    // unreadable file, malformed document, bad arguments
};

/// Runs `halin-star <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halinstar::cli
