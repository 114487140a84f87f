#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace funclass::cli {

// 0: the property holds or the construction succeeded.
// 1: the property fails; the report carries witnesses.
// 2: usage or data error; a message goes to the error stream.
enum ExitCode : int { kHolds = 0, kFails = 1, kUsage = 2 };

// args excludes the program name. The JSON report goes to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace funclass::cli
