#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace multipers::cli {

/// Exit codes of the command-line front end.
enum exit_code : int { success = 0, input_error = 1, rejected = 2 };

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multipers::cli
