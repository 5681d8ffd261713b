#pragma once

#include "minigolo/runtime/value.hpp"
#include "minigolo/support/operator_kind.hpp"

namespace minigolo {

/// Widest numeric kind wins: Double > Long > Int. Throws RuntimeError(NotNumeric)
/// when either kind is not numeric.
Kind promote(Kind a, Kind b);

/// The semantic table behind every operator target. `op` must not be And/Or.
/// Throws RuntimeError(TypeMismatch) when no rule applies and
/// RuntimeError(DivisionByZero) for integral `/` and `%` by zero.
Value apply_operator(BinaryOp op, const Value& a, const Value& b);
Value apply_unary(UnaryOp op, const Value& v);

/// True when `op` has a rule for the given operand kinds.
bool operator_defined(BinaryOp op, Kind a, Kind b);
bool operator_defined(UnaryOp op, Kind v);

[[noreturn]] void throw_operator_mismatch(BinaryOp op, Kind a, Kind b);

}  // namespace minigolo
