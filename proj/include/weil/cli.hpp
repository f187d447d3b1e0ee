#pragma once

#include <iosfwd>

namespace weil::cli {

/// Parses argv, runs one subcommand and prints its report. Returns 0 when
/// every check passes, 2 when a check fails and 1 on usage or I/O errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weil::cli
