#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <type_traits>

#include "minigolo/runtime/value.hpp"
#include "minigolo/support/errors.hpp"
#include "minigolo/support/operator_kind.hpp"

// Machine-level arithmetic shared by the operator table, apply_operator and the
// AST engine's specialized fast paths. Integral kinds wrap (two's complement),
// `/` truncates toward zero and `%` takes the dividend's sign.
namespace minigolo::numeric {

template <class T>
constexpr Kind kind_of() {
  if constexpr (std::is_same_v<T, std::int32_t>) {
    return Kind::Int;
  } else if constexpr (std::is_same_v<T, std::int64_t>) {
    return Kind::Long;
  } else {
    static_assert(std::is_same_v<T, double>);
    return Kind::Double;
  }
}

template <class T>
inline Value make(T v) {
  if constexpr (std::is_same_v<T, std::int32_t>) {
    return Value::integer(v);
  } else if constexpr (std::is_same_v<T, std::int64_t>) {
    return Value::long_integer(v);
  } else {
    return Value::real(v);
  }
}

/// Reads any numeric value as T (widening only, callers promote first).
template <class T>
inline T get(const Value& v) {
  switch (v.kind()) {
    case Kind::Int: return static_cast<T>(v.as_int());
    case Kind::Long: return static_cast<T>(v.as_long());
    default: return static_cast<T>(v.as_double());
  }
}

template <class T>
inline T add(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    using U = std::make_unsigned_t<T>;
    return static_cast<T>(static_cast<U>(a) + static_cast<U>(b));
  } else {
    return a + b;
  }
}

template <class T>
inline T sub(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    using U = std::make_unsigned_t<T>;
    return static_cast<T>(static_cast<U>(a) - static_cast<U>(b));
  } else {
    return a - b;
  }
}

template <class T>
inline T mul(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    using U = std::make_unsigned_t<T>;
    return static_cast<T>(static_cast<U>(a) * static_cast<U>(b));
  } else {
    return a * b;
  }
}

template <class T>
inline T neg(T a) {
  if constexpr (std::is_integral_v<T>) {
    using U = std::make_unsigned_t<T>;
    return static_cast<T>(U{0} - static_cast<U>(a));
  } else {
    return -a;
  }
}

template <class T>
inline T div(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    if (b == 0) throw RuntimeError(ErrorKind::DivisionByZero, "/ by zero");
    if (a == std::numeric_limits<T>::min() && b == -1) return a;
    return a / b;
  } else {
    return a / b;
  }
}

template <class T>
inline T mod(T a, T b) {
  if constexpr (std::is_integral_v<T>) {
    if (b == 0) throw RuntimeError(ErrorKind::DivisionByZero, "% by zero");
    if (b == -1) return 0;
    return a % b;
  } else {
    return std::fmod(a, b);
  }
}

/// Arithmetic ops return T, comparisons return bool.
template <BinaryOp Op, class T>
inline auto apply(T a, T b) {
  if constexpr (Op == BinaryOp::Plus) return add(a, b);
  else if constexpr (Op == BinaryOp::Minus) return sub(a, b);
  else if constexpr (Op == BinaryOp::Times) return mul(a, b);
  else if constexpr (Op == BinaryOp::Divide) return div(a, b);
  else if constexpr (Op == BinaryOp::Modulo) return mod(a, b);
  else if constexpr (Op == BinaryOp::Equals) return a == b;
  else if constexpr (Op == BinaryOp::NotEquals) return a != b;
  else if constexpr (Op == BinaryOp::Less) return a < b;
  else if constexpr (Op == BinaryOp::LessOrEquals) return a <= b;
  else if constexpr (Op == BinaryOp::More) return a > b;
  else {
    static_assert(Op == BinaryOp::MoreOrEquals);
    return a >= b;
  }
}

/// Runtime-op variant of apply() producing a boxed result.
template <class T>
inline Value apply_boxed(BinaryOp op, T a, T b) {
  switch (op) {
    case BinaryOp::Plus: return make(add(a, b));
    case BinaryOp::Minus: return make(sub(a, b));
    case BinaryOp::Times: return make(mul(a, b));
    case BinaryOp::Divide: return make(div(a, b));
    case BinaryOp::Modulo: return make(mod(a, b));
    case BinaryOp::Equals: return Value::boolean(a == b);
    case BinaryOp::NotEquals: return Value::boolean(a != b);
    case BinaryOp::Less: return Value::boolean(a < b);
    case BinaryOp::LessOrEquals: return Value::boolean(a <= b);
    case BinaryOp::More: return Value::boolean(a > b);
    case BinaryOp::MoreOrEquals: return Value::boolean(a >= b);
    default: break;
  }
  throw RuntimeError(ErrorKind::TypeMismatch, "operator " + std::string(symbol(op)) +
                                                  " is not a numeric operator");
}

/// Java-style narrowing of a double: NaN -> 0, out of range saturates.
template <class T>
inline T from_double(double d) {
  static_assert(std::is_integral_v<T>);
  if (std::isnan(d)) return 0;
  if (d >= static_cast<double>(std::numeric_limits<T>::max())) return std::numeric_limits<T>::max();
  if (d <= static_cast<double>(std::numeric_limits<T>::min())) return std::numeric_limits<T>::min();
  return static_cast<T>(d);
}

}  // namespace minigolo::numeric
