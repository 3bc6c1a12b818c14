#pragma once

#include <iosfwd>

namespace wz::cli {

/// Runs the wzsum command line. Returns 0 when every check passes, 1 when
/// a check fails and 2 on usage or pipeline errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wz::cli
