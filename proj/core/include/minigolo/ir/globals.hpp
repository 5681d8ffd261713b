#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "minigolo/ir/ir.hpp"
#include "minigolo/runtime/natives.hpp"

namespace minigolo {

/// Module-level names in resolution order: module functions and structures,
/// then imported library functions, then builtins.
class ModuleGlobals {
 public:
  enum class Category { None, Function, Structure, Import, Ambiguous, Builtin };

  explicit ModuleGlobals(const ir::Module& module);

  Category classify(std::string_view name) const;

  /// The unique imported native providing `name`, or null.
  const NativeFunction* imported(std::string_view name) const;

 private:
  std::set<std::string, std::less<>> functions_;
  std::set<std::string, std::less<>> structures_;
  std::vector<const LibraryModule*> imports_;
};

}  // namespace minigolo
