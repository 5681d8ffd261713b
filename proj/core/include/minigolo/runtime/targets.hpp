#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "minigolo/runtime/discriminator.hpp"
#include "minigolo/runtime/natives.hpp"
#include "minigolo/runtime/program.hpp"
#include "minigolo/runtime/value.hpp"
#include "minigolo/support/operator_kind.hpp"

namespace minigolo {

class Runtime;
class Shape;

/// A resolved dispatch target: the leaf of a guarded handle chain.
class DirectTarget {
 public:
  virtual ~DirectTarget() = default;

  /// Method targets receive the receiver as args[0].
  virtual Value invoke(std::span<const Value> args, Runtime& rt) const = 0;
  virtual std::string describe() const = 0;

  /// Set when the target is a plain call of a user function with the same
  /// arguments, so engines can push the frame themselves.
  virtual std::optional<std::uint32_t> user_function() const { return std::nullopt; }
};

using TargetPtr = std::shared_ptr<const DirectTarget>;

/// What a lookup produced: the target and the guard under which it stays valid.
struct Linkage {
  Discriminator guard;
  TargetPtr target;
};

using BinaryOperatorFn = Value (*)(const Value&, const Value&);
using UnaryOperatorFn = Value (*)(const Value&);

/// One specialization in the operator method table (e.g. plus(Int, Long) -> Long).
struct OperatorMethod {
  std::string name;
  Kind left;
  Kind right;
  BinaryOperatorFn fn;
};

struct UnaryOperatorMethod {
  std::string name;
  Kind operand;
  UnaryOperatorFn fn;
};

const std::vector<OperatorMethod>& operator_methods();
const std::vector<UnaryOperatorMethod>& unary_operator_methods();

/// Operator lookup by observed operand kinds. Exact kind-pair guard.
/// Throws RuntimeError(TypeMismatch) when no rule applies.
Linkage link_operator(BinaryOp op, const Value& a, const Value& b);
Linkage link_unary_operator(UnaryOp op, const Value& v);

/// Module function, structure constructor, imported native or builtin by
/// name. The guard is constant: the callee never changes for a named call.
Linkage link_function(const ProgramInfo& program, std::string_view name);

/// Four-tier method resolution: builtin methods for the receiver kind,
/// structure field getter/setter, dynamic-object property, augmentation.
/// `argc` excludes the receiver. Throws RuntimeError(NoSuchMethod) when every tier misses.
Linkage method_lookup(Runtime& rt, const Value& receiver, std::string_view name, std::size_t argc);

/// Throws RuntimeError(ArityError) unless user function `index` takes `argc` parameters.
void check_arity(const ProgramInfo& program, std::uint32_t index, std::size_t argc);

}  // namespace minigolo
