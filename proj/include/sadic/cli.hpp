#pragma once

#include <iosfwd>

namespace sadic {

/// Exit codes: 0 pass, 1 usage or I/O error, 2 construction or verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sadic
