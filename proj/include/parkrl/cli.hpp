#pragma once

#include <iosfwd>

namespace parkrl {

// Entry point of the parkrl tool. Returns 0 on success, 1 on a usage or
// configuration error and 2 on a runtime failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parkrl
