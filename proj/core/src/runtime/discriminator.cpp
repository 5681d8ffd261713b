#include "minigolo/runtime/discriminator.hpp"

#include "minigolo/runtime/program.hpp"
#include "minigolo/runtime/shape.hpp"

namespace minigolo {

std::string GuardKey::describe() const {
  switch (tag()) {
    case Tag::Kind: return std::string(kind_name(static_cast<minigolo::Kind>(payload())));
    case Tag::Shape: return "shape#" + std::to_string(payload());
    case Tag::Type: return "struct#" + std::to_string(payload());
    case Tag::Callee: return "callee#" + std::to_string(payload());
  }
  return "?";
}

GuardKey receiver_key(const Value& v) {
  switch (v.kind()) {
    case Kind::DynamicObject: return GuardKey::of_shape(v.as_object().shape->id());
    case Kind::Struct: return GuardKey::of_type(v.as_struct().type->id);
    default: return GuardKey::of_kind(v.kind());
  }
}

std::string Discriminator::describe() const {
  std::string out = "(";
  for (std::size_t i = 0; i < arity; ++i) {
    if (i > 0) out += ", ";
    out += keys[i].describe();
  }
  return out + ")";
}

}  // namespace minigolo
