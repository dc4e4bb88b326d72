#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mm::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2 };

// Runs one `mm` invocation. `args` excludes the program name. Reads
// MM_GUARD from the environment to override the enumeration guard.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mm::cli
