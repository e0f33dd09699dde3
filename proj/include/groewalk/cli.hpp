#pragma once

#include <iosfwd>

namespace groewalk {

// Command dispatch for the groewalk tool. Exit codes: 0 success, 2 parse or
// usage error, 3 precondition violation, 4 dimension guard.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace groewalk
