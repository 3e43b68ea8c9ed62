#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grpd::cli {

  // Runs one `grpd` invocation. `args` excludes the program name. Reports go
  // to `out`, diagnostics to `err`.
  //
  // Exit codes: 0 every check passed, 1 a check failed (witnesses are in the
  // report), 2 parse or usage error.
  int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace grpd::cli
