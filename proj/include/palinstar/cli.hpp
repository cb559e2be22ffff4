#pragma once

#include <iosfwd>

namespace palinstar {

// Exit codes: 0 success, 1 a checked assertion failed, 2 usage, parse or
// validation error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace palinstar
