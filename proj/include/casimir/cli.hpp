#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir::cli {

/// Runs one CLI invocation. args[0] is the program name. Returns 0 on success,
/// 1 on computation errors and 2 on usage errors; every failure writes exactly
/// one `error: <category>: <message>` line to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
