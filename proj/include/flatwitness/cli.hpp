#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatwitness::cli {

/// Exit codes: 0 all checks pass, 1 a check failed or input was rejected, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatwitness::cli
