#include "minigolo/runtime/operators.hpp"

#include "minigolo/runtime/numeric.hpp"
#include "minigolo/runtime/render.hpp"

namespace minigolo {

Kind promote(Kind a, Kind b) {
  if (!is_numeric(a) || !is_numeric(b)) {
    throw RuntimeError(ErrorKind::NotNumeric, "promote(" + std::string(kind_name(a)) + ", " +
                                                  std::string(kind_name(b)) + ")");
  }
  if (a == Kind::Double || b == Kind::Double) return Kind::Double;
  if (a == Kind::Long || b == Kind::Long) return Kind::Long;
  return Kind::Int;
}

void throw_operator_mismatch(BinaryOp op, Kind a, Kind b) {
  throw RuntimeError(ErrorKind::TypeMismatch,
                     std::string(operator_name(op)) + "(" + std::string(kind_name(a)) + ", " +
                         std::string(kind_name(b)) + ")");
}

bool operator_defined(BinaryOp op, Kind a, Kind b) {
  if (is_logical(op)) return false;
  if (op == BinaryOp::Equals || op == BinaryOp::NotEquals) return true;
  if (op == BinaryOp::Plus && (a == Kind::Str || b == Kind::Str)) return true;
  return is_numeric(a) && is_numeric(b);
}

bool operator_defined(UnaryOp op, Kind v) {
  return op == UnaryOp::Neg ? is_numeric(v) : v == Kind::Bool;
}

Value apply_operator(BinaryOp op, const Value& a, const Value& b) {
  if (a.is_numeric() && b.is_numeric()) {
    switch (promote(a.kind(), b.kind())) {
      case Kind::Int: return numeric::apply_boxed(op, a.as_int(), b.as_int());
      case Kind::Long:
        return numeric::apply_boxed(op, numeric::get<std::int64_t>(a), numeric::get<std::int64_t>(b));
      default: return numeric::apply_boxed(op, numeric::get<double>(a), numeric::get<double>(b));
    }
  }
  if (op == BinaryOp::Plus && (a.is(Kind::Str) || b.is(Kind::Str))) {
    std::string text;
    render_to(text, a);
    render_to(text, b);
    return Value::str(std::move(text));
  }
  if (op == BinaryOp::Equals) return Value::boolean(values_equal(a, b));
  if (op == BinaryOp::NotEquals) return Value::boolean(!values_equal(a, b));
  throw_operator_mismatch(op, a.kind(), b.kind());
}

Value apply_unary(UnaryOp op, const Value& v) {
  if (op == UnaryOp::Neg) {
    switch (v.kind()) {
      case Kind::Int: return Value::integer(numeric::neg(v.as_int()));
      case Kind::Long: return Value::long_integer(numeric::neg(v.as_long()));
      case Kind::Double: return Value::real(-v.as_double());
      default: break;
    }
  } else if (v.is(Kind::Bool)) {
    return Value::boolean(!v.as_bool());
  }
  throw RuntimeError(ErrorKind::TypeMismatch,
                     std::string(operator_name(op)) + "(" + std::string(kind_name(v.kind())) + ")");
}

}  // namespace minigolo
