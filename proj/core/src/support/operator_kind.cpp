#include "minigolo/support/operator_kind.hpp"

#include <array>

namespace minigolo {

namespace {

struct BinaryOpInfo {
  BinaryOp op;
  std::string_view symbol;
  std::string_view name;
};

constexpr std::array<BinaryOpInfo, 13> kBinaryOps = {{
    {BinaryOp::Plus, "+", "plus"},
    {BinaryOp::Minus, "-", "minus"},
    {BinaryOp::Times, "*", "times"},
    {BinaryOp::Divide, "/", "divide"},
    {BinaryOp::Modulo, "%", "modulo"},
    {BinaryOp::Equals, "==", "equals"},
    {BinaryOp::NotEquals, "!=", "notequals"},
    {BinaryOp::Less, "<", "less"},
    {BinaryOp::LessOrEquals, "<=", "lessorequals"},
    {BinaryOp::More, ">", "more"},
    {BinaryOp::MoreOrEquals, ">=", "moreorequals"},
    {BinaryOp::And, "and", "and"},
    {BinaryOp::Or, "or", "or"},
}};

}  // namespace

std::string_view symbol(BinaryOp op) { return kBinaryOps[static_cast<std::size_t>(op)].symbol; }
std::string_view operator_name(BinaryOp op) {
  return kBinaryOps[static_cast<std::size_t>(op)].name;
}

std::string_view symbol(UnaryOp op) { return op == UnaryOp::Neg ? "-" : "not"; }
std::string_view operator_name(UnaryOp op) { return op == UnaryOp::Neg ? "neg" : "not"; }

std::optional<BinaryOp> binary_op_from_symbol(std::string_view text) {
  for (const auto& info : kBinaryOps) {
    if (info.symbol == text) return info.op;
  }
  return std::nullopt;
}

}  // namespace minigolo
