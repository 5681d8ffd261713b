#pragma once

#include <ostream>

namespace minigolo::tools {

/// Entry point of the `minigolo` executable (run / compile / bench).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace minigolo::tools
