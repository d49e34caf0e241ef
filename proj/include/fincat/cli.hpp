#pragma once

// Command-line front end. Every subcommand prints one JSON document on
// `out`; the exit code is 0 when the check holds, 1 when it fails (the
// document then carries a witness) and 2 on input or parse errors.

#include <ostream>
#include <string>
#include <vector>

namespace fincat {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fincat
