#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skein {

// Exit codes of the command-line front end.
enum ExitCode { kOk = 0, kParseError = 1, kValidationError = 2, kVerificationFailure = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skein
