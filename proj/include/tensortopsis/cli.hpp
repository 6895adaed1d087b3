#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace tensortopsis {

/// Runs one command line (without the program name). Tables go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 on a validation or
/// compute error (with an `error: <Code>: <detail>` line on `err`) and 2 on
/// a usage error.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tensortopsis
