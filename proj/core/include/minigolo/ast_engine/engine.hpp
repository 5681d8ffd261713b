#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "minigolo/ast_engine/exec_tree.hpp"
#include "minigolo/runtime/runtime.hpp"

namespace minigolo::ast_engine {

struct AstConfig {
  std::size_t max_call_depth = 100000;
};

/// Tree-walking engine over an ExecTree.
class AstEngine final : public Runtime {
 public:
  AstEngine(ExecTree& tree, AstConfig config, std::ostream& out);
  ~AstEngine() override;

  /// Calls `main`, passing `args` as a tuple when main declares a parameter.
  Value run_main(std::span<const Value> args = {});

  Value call_function(std::uint32_t index, std::span<const Value> args) override;
  Value call_value(const Value& callee, std::span<const Value> args) override;

  /// Calls function `index`; the result may stay unboxed.
  Typed invoke(std::uint32_t index, std::span<const Value> args);

  ExecTree& tree() { return tree_; }

 private:
  class SlotArena;

  ExecTree& tree_;
  AstConfig config_;
  std::unique_ptr<SlotArena> arena_;
  std::size_t depth_ = 0;
};

}  // namespace minigolo::ast_engine
