#pragma once

#include <ostream>

namespace modkit::cli {

/// Runs the modkit command line with the given arguments (argv[0] is the
/// program name) and returns the exit code.
///
///   0  success
///   1  solver or verification failure
///   2  unreadable input, parse error or bad flags
///   3  enumeration size guard exceeded
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modkit::cli
