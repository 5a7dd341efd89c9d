#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

namespace uebkit::cli {

enum ExitCode : int { Pass = 0, Fail = 1, InputError = 2 };

/// Runs the command line; reports go to out as JSON lines, a readable
/// summary to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string sha256_hex(std::string_view data);

}  // namespace uebkit::cli
