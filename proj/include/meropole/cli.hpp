#pragma once

#include <iosfwd>

namespace meropole {

/// Command-line entry point. Exit codes: 0 success, 1 input error,
/// 2 mathematical refusal.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace meropole
