#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace neuralcode {

/// Exit statuses of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs one command line (without the program name). The code is read from
/// --input <path> or, by default, from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace neuralcode
