#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thinpath::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kBudgetExhausted = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thinpath::cli
