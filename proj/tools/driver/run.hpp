#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "minigolo/dispatch/policy.hpp"

namespace minigolo::tools {

enum class Engine { Bytecode, Ast };

/// Throws std::invalid_argument for anything but `bytecode` or `ast`.
Engine parse_engine(std::string_view text);
std::string_view to_string(Engine engine);

struct RunOptions {
  Engine engine = Engine::Bytecode;
  DispatchPolicy policy = DispatchPolicy::mono();
  bool specialize = true;
  std::size_t dispatch_depth = 3;
  bool dump_dispatch_stats = false;
  bool dump_profile = false;
  bool instrument_boxing = false;
  std::vector<std::string> program_args;  // passed to main as a tuple of strings
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int runtime_error = 1;
inline constexpr int compile_error = 2;
inline constexpr int usage = 64;
}  // namespace exit_code

/// Compiles and runs `source` on a large-stack thread. Program output goes to
/// `out`; diagnostics, stats and profiles go to `err`. Returns the exit code.
int run_program(std::string_view source, std::string_view file, const RunOptions& options,
                std::ostream& out, std::ostream& err);

enum class EmitStage { Tokens, Ast, Ir, Bytecode };

EmitStage parse_stage(std::string_view text);

/// Writes the requested pipeline dump to `out`. Returns the exit code.
int emit(std::string_view source, std::string_view file, EmitStage stage, std::ostream& out,
         std::ostream& err);

}  // namespace minigolo::tools
