#include "minigolo/runtime/runtime.hpp"
#include "minigolo/runtime/targets.hpp"
#include "minigolo/support/errors.hpp"

namespace minigolo {

namespace {

/// Constant guard of named call sites: the callee of a name never changes.
Discriminator callee_guard() { return Discriminator::of(GuardKey::of_callee(0)); }

class UserFunctionTarget final : public DirectTarget {
 public:
  UserFunctionTarget(std::uint32_t index, std::string name) : index_(index), name_(std::move(name)) {}
  Value invoke(std::span<const Value> args, Runtime& rt) const override {
    check_arity(rt.program(), index_, args.size());
    return rt.call_function(index_, args);
  }
  std::string describe() const override { return "function " + name_; }
  std::optional<std::uint32_t> user_function() const override { return index_; }

 private:
  std::uint32_t index_;
  std::string name_;
};

class NativeFunctionTarget final : public DirectTarget {
 public:
  explicit NativeFunctionTarget(const NativeFunction& fn) : fn_(fn) {}
  Value invoke(std::span<const Value> args, Runtime& rt) const override {
    if (fn_.arity != kVariadic && static_cast<std::size_t>(fn_.arity) != args.size()) {
      throw RuntimeError(ErrorKind::ArityError, std::string(fn_.name) + " expects " +
                                                    std::to_string(fn_.arity) + " argument(s), got " +
                                                    std::to_string(args.size()));
    }
    return fn_.fn(rt, args);
  }
  std::string describe() const override { return "native " + std::string(fn_.name); }

 private:
  const NativeFunction& fn_;
};

class StructConstructorTarget final : public DirectTarget {
 public:
  explicit StructConstructorTarget(const StructType& type) : type_(type) {}
  Value invoke(std::span<const Value> args, Runtime&) const override {
    if (args.empty()) return Value::structure(&type_, std::vector<Value>(type_.fields.size()));
    if (args.size() != type_.fields.size()) {
      throw RuntimeError(ErrorKind::ArityError, type_.name + " expects " +
                                                    std::to_string(type_.fields.size()) +
                                                    " field value(s), got " + std::to_string(args.size()));
    }
    return Value::structure(&type_, std::vector<Value>(args.begin(), args.end()));
  }
  std::string describe() const override { return "constructor " + type_.name; }

 private:
  const StructType& type_;
};

class BuiltinMethodTarget final : public DirectTarget {
 public:
  explicit BuiltinMethodTarget(const BuiltinMethod& method) : method_(method) {}
  Value invoke(std::span<const Value> args, Runtime& rt) const override { return method_.fn(rt, args); }
  std::string describe() const override {
    return std::string(kind_name(method_.receiver)) + "." + std::string(method_.name);
  }

 private:
  const BuiltinMethod& method_;
};

class FieldGetterTarget final : public DirectTarget {
 public:
  FieldGetterTarget(std::uint32_t field, std::string name) : field_(field), name_(std::move(name)) {}
  Value invoke(std::span<const Value> args, Runtime&) const override {
    return args[0].as_struct().fields[field_];
  }
  std::string describe() const override { return "getter " + name_; }

 private:
  std::uint32_t field_;
  std::string name_;
};

class FieldSetterTarget final : public DirectTarget {
 public:
  FieldSetterTarget(std::uint32_t field, std::string name) : field_(field), name_(std::move(name)) {}
  Value invoke(std::span<const Value> args, Runtime&) const override {
    args[0].as_struct().fields[field_] = args[1];
    return args[0];
  }
  std::string describe() const override { return "setter " + name_; }

 private:
  std::uint32_t field_;
  std::string name_;
};

/// An existing dynamic-object property. The shape guard fixes the slot; the
/// slot's current value decides between invocation, read and write.
class PropertyTarget final : public DirectTarget {
 public:
  PropertyTarget(std::uint32_t slot, std::string name) : slot_(slot), name_(std::move(name)) {}
  Value invoke(std::span<const Value> args, Runtime& rt) const override {
    auto& object = args[0].as_object();
    const Value property = object.slots[slot_];
    if (property.is_callable()) return rt.call_value(property, args);
    if (args.size() == 1) return property;
    if (args.size() == 2) {
      object.slots[slot_] = args[1];
      return args[0];
    }
    throw RuntimeError(ErrorKind::NoSuchMethod, "DynamicObject." + name_ + "/" +
                                                    std::to_string(args.size() - 1));
  }
  std::string describe() const override { return "property " + name_; }

 private:
  std::uint32_t slot_;
  std::string name_;
};

class PropertyDefineTarget final : public DirectTarget {
 public:
  explicit PropertyDefineTarget(std::string name) : name_(std::move(name)) {}
  Value invoke(std::span<const Value> args, Runtime& rt) const override {
    auto& object = args[0].as_object();
    const Shape* next = rt.shapes().define(object.shape, name_);
    const auto slot = *next->slot_of(name_);
    if (slot >= object.slots.size()) object.slots.resize(slot + 1);
    object.shape = next;
    object.slots[slot] = args[1];
    return args[0];
  }
  std::string describe() const override { return "define " + name_; }

 private:
  std::string name_;
};

}  // namespace

void check_arity(const ProgramInfo& program, std::uint32_t index, std::size_t argc) {
  const auto& info = program.functions[index];
  if (info.arity != argc) {
    throw RuntimeError(ErrorKind::ArityError, info.name + " expects " + std::to_string(info.arity) +
                                                  " argument(s), got " + std::to_string(argc));
  }
}

Linkage link_function(const ProgramInfo& program, std::string_view name) {
  const GlobalBinding* binding = program.global(name);
  if (binding == nullptr) {
    throw RuntimeError(ErrorKind::NoSuchMethod, "no function named " + std::string(name));
  }
  switch (binding->kind) {
    case GlobalBinding::Kind::Function:
      return {callee_guard(), std::make_shared<UserFunctionTarget>(
                                  binding->index, program.functions[binding->index].name)};
    case GlobalBinding::Kind::Structure:
      return {callee_guard(), std::make_shared<StructConstructorTarget>(*program.structs[binding->index])};
    case GlobalBinding::Kind::Native:
      return {callee_guard(), std::make_shared<NativeFunctionTarget>(*binding->native)};
  }
  throw std::logic_error("unknown global binding");
}

Linkage method_lookup(Runtime& rt, const Value& receiver, std::string_view name, std::size_t argc) {
  const Discriminator guard = Discriminator::of(receiver_key(receiver));

  if (const auto* method = find_builtin_method(receiver.kind(), name, argc)) {
    return {guard, std::make_shared<BuiltinMethodTarget>(*method)};
  }

  if (receiver.is(Kind::Struct)) {
    const StructType& type = *receiver.as_struct().type;
    if (auto field = type.field_index(name)) {
      if (argc == 0) return {guard, std::make_shared<FieldGetterTarget>(*field, std::string(name))};
      if (argc == 1) return {guard, std::make_shared<FieldSetterTarget>(*field, std::string(name))};
    }
  }

  if (receiver.is(Kind::DynamicObject)) {
    const Shape* shape = receiver.as_object().shape;
    if (auto slot = shape->slot_of(name)) {
      return {guard, std::make_shared<PropertyTarget>(*slot, std::string(name))};
    }
    if (argc == 1) return {guard, std::make_shared<PropertyDefineTarget>(std::string(name))};
  }

  const ProgramInfo& program = rt.program();
  const auto type = program.type_name(receiver);
  if (auto index = program.augmentations.find(type, name)) {
    return {guard, std::make_shared<UserFunctionTarget>(*index, program.functions[*index].name)};
  }

  throw RuntimeError(ErrorKind::NoSuchMethod,
                     std::string(type) + "." + std::string(name) + "/" + std::to_string(argc));
}

}  // namespace minigolo
