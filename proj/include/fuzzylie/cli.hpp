#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzylie {

/// Runs one command line (without the program name). Returns 0 on success or
/// PASS, 1 when a predicate is false or a check fails, 2 on usage or parse errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzylie
