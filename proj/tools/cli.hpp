#pragma once

#include <iosfwd>

namespace gas3km {

/// Entry point of the `gas3km` tool. Returns 0 on success, 2 on usage errors
/// (unknown flag, unknown function id) and 1 on runtime failures.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gas3km
