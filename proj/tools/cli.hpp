#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coalg/error.hpp"

namespace coalg::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,   ///< parse, validation, precondition
  kMismatch = 2,  ///< objects or functors do not line up
  kUnsupported = 3,
  kLawFailure = 4,
};

int exit_code(ErrorKind kind);

/// Environment variable that overrides the default enumeration limit.
inline constexpr const char* kLimitVariable = "COALG_ENUM_LIMIT";

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coalg::cli
