#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace minigolo {

enum class BinaryOp : std::uint8_t {
  Plus,
  Minus,
  Times,
  Divide,
  Modulo,
  Equals,
  NotEquals,
  Less,
  LessOrEquals,
  More,
  MoreOrEquals,
  And,
  Or,
};

enum class UnaryOp : std::uint8_t { Neg, Not };

/// Source spelling: `+`, `<=`, `and`...
std::string_view symbol(BinaryOp op);
std::string_view symbol(UnaryOp op);

/// Dispatch name used by call sites and disassembly: `plus`, `lessorequals`...
std::string_view operator_name(BinaryOp op);
std::string_view operator_name(UnaryOp op);

std::optional<BinaryOp> binary_op_from_symbol(std::string_view text);

inline bool is_comparison(BinaryOp op) {
  return op >= BinaryOp::Equals && op <= BinaryOp::MoreOrEquals;
}
inline bool is_logical(BinaryOp op) { return op == BinaryOp::And || op == BinaryOp::Or; }

}  // namespace minigolo
