#pragma once

#include <cstdint>
#include <string>

#include "minigolo/runtime/value.hpp"
#include "minigolo/support/operator_kind.hpp"

namespace minigolo::ast_engine {

/// Node specialization lattice: Uninitialized < Specialized(kinds) < Generic.
class SpecState {
 public:
  enum class Level : std::uint8_t { Uninitialized, Specialized, Generic };

  static SpecState uninitialized() { return {}; }
  static SpecState generic() {
    SpecState s;
    s.level_ = Level::Generic;
    return s;
  }
  /// Unary or single-kind specialization (`spec(Int)`).
  static SpecState specialized(Kind kind) {
    SpecState s;
    s.level_ = Level::Specialized;
    s.left_ = kind;
    s.arity_ = 1;
    return s;
  }
  static SpecState specialized(Kind left, Kind right) {
    SpecState s = specialized(left);
    s.right_ = right;
    s.arity_ = 2;
    return s;
  }
  /// `spec(Str,*)`: left is Str, right may be anything.
  static SpecState concat() {
    SpecState s = specialized(Kind::Str, Kind::Null);
    s.any_right_ = true;
    return s;
  }

  Level level() const { return level_; }
  Kind left() const { return left_; }
  Kind right() const { return right_; }
  bool any_right() const { return any_right_; }

  bool matches(Kind l) const { return level_ == Level::Specialized && left_ == l; }
  bool matches(Kind l, Kind r) const {
    return level_ == Level::Specialized && left_ == l && (any_right_ || right_ == r);
  }

  /// True when `next` is a legal successor of this state: the level never
  /// decreases and a specialized state only leaves by going generic.
  bool allows(const SpecState& next) const;

  std::string describe() const;

  friend bool operator==(const SpecState&, const SpecState&) = default;

 private:
  Level level_ = Level::Uninitialized;
  Kind left_ = Kind::Null;
  Kind right_ = Kind::Null;
  std::uint8_t arity_ = 0;
  bool any_right_ = false;
};

/// The rewrite rule of binary-op nodes for observed operand kinds.
SpecState observe_binary(const SpecState& current, BinaryOp op, Kind left, Kind right);

/// The rewrite rule of unary-op nodes.
SpecState observe_unary(const SpecState& current, UnaryOp op, Kind operand);

/// The rewrite rule of local-write nodes (specialize on Bool and numbers).
SpecState observe_store(const SpecState& current, Kind kind);

}  // namespace minigolo::ast_engine
