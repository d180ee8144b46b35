#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace witt::cli {

// Runs the wittram command line. Returns the exit status: 0 on success,
// 1 parse, 2 validation, 3 mathematical precondition, 4 internal invariant
// or oracle mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace witt::cli
