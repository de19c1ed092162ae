#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tvk {

// Runs one CLI invocation. Returns the process exit code: 0 on success, 1
// when a verification produced a negative verdict (e.g. the index condition
// fails — a successful computation, scriptable in CI), 2 on input or usage
// errors. Reports go to out; error diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tvk
