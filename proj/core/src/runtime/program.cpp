#include "minigolo/runtime/program.hpp"

#include "minigolo/ir/globals.hpp"

namespace minigolo {

void AugmentationRegistry::register_method(std::string type_name, std::string method,
                                           std::uint32_t function) {
  methods_[{std::move(type_name), std::move(method)}] = function;
}

std::optional<std::uint32_t> AugmentationRegistry::find(std::string_view type_name,
                                                        std::string_view method) const {
  auto it = methods_.find(std::pair<std::string, std::string>(type_name, method));
  if (it == methods_.end()) return std::nullopt;
  return it->second;
}

ProgramInfo ProgramInfo::from_ir(const ir::Module& module) {
  ProgramInfo info;
  for (const auto& f : module.functions) {
    info.functions.push_back(
        {f.display_name(), static_cast<std::uint32_t>(f.params.size()), f.synthetic});
  }
  for (const auto& s : module.structures) {
    auto type = std::make_unique<StructType>();
    type->id = static_cast<std::uint32_t>(info.structs.size());
    type->name = s.name;
    type->fields = s.fields;
    info.structs.push_back(std::move(type));
  }
  // Registration follows declaration order, so a later augmentation wins.
  for (const auto& aug : module.augmentations) {
    for (auto index : aug.functions) {
      info.augmentations.register_method(aug.target, module.functions[index].name, index);
    }
  }

  for (std::size_t i = 0; i < module.functions.size(); ++i) {
    const auto& f = module.functions[i];
    if (!f.augment_target.empty() || f.synthetic) continue;
    info.globals_.emplace(f.name,
                          GlobalBinding{GlobalBinding::Kind::Function, static_cast<std::uint32_t>(i)});
  }
  for (const auto& s : info.structs) {
    info.globals_.emplace(s->name, GlobalBinding{GlobalBinding::Kind::Structure, s->id});
  }
  ModuleGlobals globals(module);
  for (const auto& imp : module.imports) {
    if (const auto* lib = find_library_module(imp.name)) {
      for (const auto& fn : lib->functions) {
        if (globals.classify(fn.name) == ModuleGlobals::Category::Import) {
          info.globals_.emplace(fn.name, GlobalBinding{GlobalBinding::Kind::Native, 0, &fn});
        }
      }
    }
  }
  for (const auto& fn : builtin_functions()) {
    info.globals_.emplace(fn.name, GlobalBinding{GlobalBinding::Kind::Native, 0, &fn});
  }
  return info;
}

const GlobalBinding* ProgramInfo::global(std::string_view name) const {
  auto it = globals_.find(name);
  return it == globals_.end() ? nullptr : &it->second;
}

const StructType* ProgramInfo::find_struct(std::string_view name) const {
  for (const auto& s : structs) {
    if (s->name == name) return s.get();
  }
  return nullptr;
}

std::optional<std::uint32_t> ProgramInfo::find_function(std::string_view name) const {
  for (std::size_t i = 0; i < functions.size(); ++i) {
    if (functions[i].name == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::string_view ProgramInfo::type_name(const Value& v) const {
  if (v.is(Kind::Struct)) return v.as_struct().type->name;
  return kind_name(v.kind());
}

}  // namespace minigolo
