#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plaus {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit status: 0 when every check in the invocation passed, 1 when
/// a check failed (countermodel found, formula false in the model, a law
/// deviated from its expected outcome), 2 on usage, file, parse or guard
/// errors (diagnostic on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace plaus
