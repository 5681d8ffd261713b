#include "minigolo/ir/globals.hpp"

namespace minigolo {

ModuleGlobals::ModuleGlobals(const ir::Module& module) {
  for (const auto& f : module.functions) {
    if (f.augment_target.empty() && !f.synthetic) functions_.insert(f.name);
  }
  for (const auto& s : module.structures) structures_.insert(s.name);
  for (const auto& imp : module.imports) {
    // Unknown imports (host packages such as java.util) contribute nothing.
    if (const auto* lib = find_library_module(imp.name)) {
      bool seen = false;
      for (const auto* existing : imports_) seen = seen || existing == lib;
      if (!seen) imports_.push_back(lib);
    }
  }
}

ModuleGlobals::Category ModuleGlobals::classify(std::string_view name) const {
  if (functions_.contains(name)) return Category::Function;
  if (structures_.contains(name)) return Category::Structure;
  int providers = 0;
  for (const auto* lib : imports_) {
    if (find_library_function(*lib, name)) ++providers;
  }
  if (providers > 1) return Category::Ambiguous;
  if (providers == 1) return Category::Import;
  if (find_builtin_function(name)) return Category::Builtin;
  return Category::None;
}

const NativeFunction* ModuleGlobals::imported(std::string_view name) const {
  const NativeFunction* found = nullptr;
  for (const auto* lib : imports_) {
    if (const auto* fn = find_library_function(*lib, name)) {
      if (found) return nullptr;
      found = fn;
    }
  }
  return found;
}

}  // namespace minigolo
