#pragma once

// The oreqb command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace oreqb::cli {

enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kRefuted = 2,  // refuted check, or a verify run with unexpected outcomes
  kBudget = 3,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oreqb::cli
