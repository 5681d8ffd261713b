#pragma once

#include <span>
#include <string_view>

#include "minigolo/runtime/value.hpp"

namespace minigolo {

class Runtime;

using NativeFn = Value (*)(Runtime&, std::span<const Value>);

inline constexpr int kVariadic = -1;

struct NativeFunction {
  std::string_view module;  // empty for global builtins
  std::string_view name;
  int arity;  // kVariadic accepts any count
  NativeFn fn;
};

/// Free functions visible without import: println, print, DynamicObject,
/// tuple, range, currentTimeMillis.
std::span<const NativeFunction> builtin_functions();
const NativeFunction* find_builtin_function(std::string_view name);

/// Native library modules reachable through `import`.
struct LibraryModule {
  std::string_view name;
  std::span<const NativeFunction> functions;
};
std::span<const LibraryModule> library_modules();
const LibraryModule* find_library_module(std::string_view name);
const NativeFunction* find_library_function(const LibraryModule& module, std::string_view name);

/// Builtin methods by receiver kind. `argc` excludes the receiver.
struct BuiltinMethod {
  Kind receiver;
  std::string_view name;
  int argc;
  NativeFn fn;  // args[0] is the receiver
};
const BuiltinMethod* find_builtin_method(Kind receiver, std::string_view name, std::size_t argc);
std::span<const BuiltinMethod> builtin_methods();

}  // namespace minigolo
