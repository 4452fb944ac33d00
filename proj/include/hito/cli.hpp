#pragma once
#include <ostream>
#include <string>
#include <vector>

namespace hito::cli {

// Runs one command-line invocation (args excludes the program name).
// Exit codes: 0 success, 1 witness search found nothing, 2 theorem
// verification reported violations, 64 usage errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hito::cli
