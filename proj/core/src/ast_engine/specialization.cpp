#include "minigolo/ast_engine/specialization.hpp"

#include "minigolo/ast_engine/typed.hpp"
#include "minigolo/runtime/render.hpp"

namespace minigolo::ast_engine {

bool SpecState::allows(const SpecState& next) const {
  if (next.level_ < level_) return false;
  if (level_ == Level::Specialized && next.level_ == Level::Specialized) return next == *this;
  return true;
}

std::string SpecState::describe() const {
  switch (level_) {
    case Level::Uninitialized: return "uninit";
    case Level::Generic: return "generic";
    case Level::Specialized: break;
  }
  std::string out = "spec(" + std::string(kind_name(left_));
  if (arity_ == 2) out += "," + (any_right_ ? std::string("*") : std::string(kind_name(right_)));
  return out + ")";
}

SpecState observe_binary(const SpecState& current, BinaryOp op, Kind left, Kind right) {
  switch (current.level()) {
    case SpecState::Level::Generic: return current;
    case SpecState::Level::Specialized:
      return current.matches(left, right) ? current : SpecState::generic();
    case SpecState::Level::Uninitialized: break;
  }
  if (is_logical(op)) return SpecState::generic();
  if (is_numeric(left) && is_numeric(right)) return SpecState::specialized(left, right);
  if (op == BinaryOp::Plus && left == Kind::Str) return SpecState::concat();
  return SpecState::generic();
}

SpecState observe_unary(const SpecState& current, UnaryOp op, Kind operand) {
  switch (current.level()) {
    case SpecState::Level::Generic: return current;
    case SpecState::Level::Specialized:
      return current.matches(operand) ? current : SpecState::generic();
    case SpecState::Level::Uninitialized: break;
  }
  if (op == UnaryOp::Neg && is_numeric(operand)) return SpecState::specialized(operand);
  if (op == UnaryOp::Not && operand == Kind::Bool) return SpecState::specialized(operand);
  return SpecState::generic();
}

SpecState observe_store(const SpecState& current, Kind kind) {
  switch (current.level()) {
    case SpecState::Level::Generic: return current;
    case SpecState::Level::Specialized:
      return current.matches(kind) ? current : SpecState::generic();
    case SpecState::Level::Uninitialized: break;
  }
  if (is_numeric(kind) || kind == Kind::Bool) return SpecState::specialized(kind);
  return SpecState::generic();
}

void render_typed(std::string& out, const Typed& t) {
  if (t.boxed) {
    render_to(out, t.value);
    return;
  }
  switch (t.kind) {
    case Kind::Bool: out += t.raw.b ? "true" : "false"; break;
    case Kind::Int: out += std::to_string(t.raw.i); break;
    case Kind::Long: out += std::to_string(t.raw.l); break;
    default: out += render_double(t.raw.d); break;
  }
}

}  // namespace minigolo::ast_engine
