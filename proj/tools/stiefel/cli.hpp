#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stiefel::cli {

/// Runs one `stiefel` invocation. args excludes the program name. The
/// report goes to out and diagnostics to err; the return value is the
/// process exit code (0 ok, 1 violation, 2 usage/hypothesis/budget).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stiefel::cli
