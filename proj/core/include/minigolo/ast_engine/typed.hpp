#pragma once

#include <cstdint>
#include <string>

#include "minigolo/runtime/value.hpp"

namespace minigolo::ast_engine {

/// Result of evaluating a node: either a machine-level Bool/Int/Long/Double
/// (`boxed == false`) or a boxed Value. Specialized nodes pass numbers
/// around unboxed; generic consumers call to_value().
struct Typed {
  Kind kind = Kind::Null;
  bool boxed = true;
  union {
    bool b;
    std::int32_t i;
    std::int64_t l;
    double d;
  } raw{};
  Value value;

  static Typed of(Value v) {
    Typed t;
    t.kind = v.kind();
    t.value = std::move(v);
    return t;
  }
  static Typed of_bool(bool b) {
    Typed t;
    t.kind = Kind::Bool;
    t.boxed = false;
    t.raw.b = b;
    return t;
  }
  static Typed of_int(std::int32_t i) {
    Typed t;
    t.kind = Kind::Int;
    t.boxed = false;
    t.raw.i = i;
    return t;
  }
  static Typed of_long(std::int64_t l) {
    Typed t;
    t.kind = Kind::Long;
    t.boxed = false;
    t.raw.l = l;
    return t;
  }
  static Typed of_double(double d) {
    Typed t;
    t.kind = Kind::Double;
    t.boxed = false;
    t.raw.d = d;
    return t;
  }

  /// Strips the box of a Bool/Int/Long/Double value (no allocation).
  static Typed unboxed(const Value& v) {
    switch (v.kind()) {
      case Kind::Bool: return of_bool(v.as_bool());
      case Kind::Int: return of_int(v.as_int());
      case Kind::Long: return of_long(v.as_long());
      case Kind::Double: return of_double(v.as_double());
      default: return of(v);
    }
  }

  bool as_bool() const { return boxed ? value.as_bool() : raw.b; }
  std::int32_t as_int() const { return boxed ? value.as_int() : raw.i; }
  std::int64_t as_long() const { return boxed ? value.as_long() : raw.l; }
  double as_double() const { return boxed ? value.as_double() : raw.d; }

  /// Boxes an unboxed number (this is what the box counter observes).
  Value to_value() const {
    if (boxed) return value;
    switch (kind) {
      case Kind::Bool: return Value::boolean(raw.b);
      case Kind::Int: return Value::integer(raw.i);
      case Kind::Long: return Value::long_integer(raw.l);
      default: return Value::real(raw.d);
    }
  }
};

/// Textual form of a Typed without boxing it.
void render_typed(std::string& out, const Typed& t);

}  // namespace minigolo::ast_engine
