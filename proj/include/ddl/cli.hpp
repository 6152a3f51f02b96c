#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ddl::cli {

/// Runs the `ddl` command line. Returns 0, 1 or 2: success or yes, no, and
/// error (including usage errors). Nothing is written to the process streams
/// directly.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ddl::cli
