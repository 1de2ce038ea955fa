#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pitm::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kInvalidInput = 2 };

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pitm::cli
