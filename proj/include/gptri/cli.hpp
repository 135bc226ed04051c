#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gptri::cli {

/// Runs one CLI invocation. Exit codes: 0 success, 1 verification
/// failure, 2 usage error, 3 checked-arithmetic overflow.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gptri::cli
