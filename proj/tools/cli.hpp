#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace exa::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kUnsolved = 2,
  kVerificationFailed = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exa::cli
