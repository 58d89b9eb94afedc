#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catindex::cli {

// Runs the catindex command line. Exit codes: 0 success, 1 usage or input
// error, 2 when --strict finds an audit-policy violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catindex::cli
