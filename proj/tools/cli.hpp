#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fullgraph::cli {

enum ExitCode : int { kOk = 0, kVerdictFalse = 1, kUsage = 2, kInternal = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fullgraph::cli
