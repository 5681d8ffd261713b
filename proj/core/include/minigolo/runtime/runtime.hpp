#pragma once

#include <cstdint>
#include <ostream>
#include <span>

#include "minigolo/runtime/program.hpp"
#include "minigolo/runtime/shape.hpp"
#include "minigolo/runtime/value.hpp"

namespace minigolo {

/// Services an execution engine exposes to dispatch targets and natives.
class Runtime {
 public:
  Runtime(const ProgramInfo& program, std::ostream& out) : program_(program), out_(out) {}
  virtual ~Runtime() = default;

  Runtime(const Runtime&) = delete;
  Runtime& operator=(const Runtime&) = delete;

  /// Calls user function `index` with exactly its declared parameters.
  virtual Value call_function(std::uint32_t index, std::span<const Value> args) = 0;

  /// Calls a FunctionRef or Closure value (captures are prepended for closures).
  virtual Value call_value(const Value& callee, std::span<const Value> args) = 0;

  const ProgramInfo& program() const noexcept { return program_; }
  ShapeTable& shapes() noexcept { return shapes_; }
  std::ostream& out() noexcept { return out_; }

 private:
  const ProgramInfo& program_;
  std::ostream& out_;
  ShapeTable shapes_;
};

}  // namespace minigolo
