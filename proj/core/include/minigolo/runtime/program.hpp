#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minigolo/ir/ir.hpp"
#include "minigolo/runtime/natives.hpp"
#include "minigolo/runtime/value.hpp"

namespace minigolo {

struct StructType {
  std::uint32_t id = 0;
  std::string name;
  std::vector<std::string> fields;

  std::optional<std::uint32_t> field_index(std::string_view field) const {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (fields[i] == field) return static_cast<std::uint32_t>(i);
    }
    return std::nullopt;
  }
};

/// (type name, method name) -> function index. Type names are builtin kind
/// names or structure names. Registering an existing key replaces it.
class AugmentationRegistry {
 public:
  void register_method(std::string type_name, std::string method, std::uint32_t function);
  std::optional<std::uint32_t> find(std::string_view type_name, std::string_view method) const;
  std::size_t size() const { return methods_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, std::uint32_t, std::less<>> methods_;
};

struct FunctionInfo {
  std::string name;  // display name
  std::uint32_t arity = 0;
  bool synthetic = false;
};

/// A module-level callable resolved by name.
struct GlobalBinding {
  enum class Kind : std::uint8_t { Function, Structure, Native };
  Kind kind;
  std::uint32_t index = 0;  // function index or structure id
  const NativeFunction* native = nullptr;
};

/// Engine-independent description of a checked program: callables,
/// structures, augmentations and the global name table.
class ProgramInfo {
 public:
  static ProgramInfo from_ir(const ir::Module& module);

  ProgramInfo() = default;
  ProgramInfo(ProgramInfo&&) = default;
  ProgramInfo& operator=(ProgramInfo&&) = default;

  std::vector<FunctionInfo> functions;
  std::vector<std::unique_ptr<StructType>> structs;
  AugmentationRegistry augmentations;

  const GlobalBinding* global(std::string_view name) const;
  const StructType* find_struct(std::string_view name) const;
  std::optional<std::uint32_t> find_function(std::string_view name) const;

  /// Kind name, or the structure name for structure instances.
  std::string_view type_name(const Value& v) const;

 private:
  std::map<std::string, GlobalBinding, std::less<>> globals_;
};

}  // namespace minigolo
