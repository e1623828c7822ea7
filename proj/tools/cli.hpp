#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgen::cli {

/// Runs the qgen command line. `args` excludes the program name.
///
/// Exit codes: 0 success (and every check passing), 1 a generation check
/// failed or was incomplete, 2 usage, parse or guard errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgen::cli
