#pragma once

#include <ostream>

namespace hauteur::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kNonPositiveBound = 3,
  kPrecisionFailure = 4,
};

/// Entry point for the `hauteur` executable, with the streams injectable for
/// tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hauteur::cli
