#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kritwahl::cli {

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kritwahl::cli
