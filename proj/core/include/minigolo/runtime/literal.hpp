#pragma once

#include "minigolo/frontend/ast.hpp"
#include "minigolo/runtime/value.hpp"

namespace minigolo {

inline Value literal_value(const ast::Literal& lit) {
  switch (lit.kind) {
    case ast::LiteralKind::Int: return Value::integer(static_cast<std::int32_t>(lit.integer));
    case ast::LiteralKind::Long: return Value::long_integer(lit.integer);
    case ast::LiteralKind::Double: return Value::real(lit.real);
    case ast::LiteralKind::Str: return Value::str(lit.text);
    case ast::LiteralKind::Bool: return Value::boolean(lit.boolean);
    case ast::LiteralKind::Null: break;
  }
  return Value::null();
}

}  // namespace minigolo
