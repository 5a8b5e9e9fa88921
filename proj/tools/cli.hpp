#pragma once

#include <iosfwd>

namespace zerostat::cli {

/// Exit codes: 0 success or pass, 1 failed verdict or runtime failure,
/// 2 usage error (unknown flag, malformed spectrum, inconsistent input).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zerostat::cli
