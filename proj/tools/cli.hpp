#pragma once

#include <iosfwd>

namespace kdis::cli {

/// Runs the kdis command line. Returns 0 on success, 1 on domain errors and
/// 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kdis::cli
