#pragma once

#include <iosfwd>

namespace fqcount {

/// Command-line front end. Parses argv, runs the requested command, writes
/// the report to out and diagnostics to err. Returns the process exit
/// status: 0 all checks hold, 1 at least one check failed, 2 usage or
/// domain or capacity error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fqcount
