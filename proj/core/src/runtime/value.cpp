#include "minigolo/runtime/value.hpp"

#include <array>
#include <bit>

#include "minigolo/runtime/shape.hpp"

namespace minigolo {

namespace {

constexpr std::array<std::string_view, kKindCount> kKindNames = {
    "Null", "Bool", "Int", "Long", "Double", "Str",
    "Function", "Closure", "Tuple", "List", "Struct", "DynamicObject",
};

double to_double(const Value& v) {
  switch (v.kind()) {
    case Kind::Int: return v.as_int();
    case Kind::Long: return static_cast<double>(v.as_long());
    default: return v.as_double();
  }
}

}  // namespace

std::string_view kind_name(Kind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

bool kind_from_name(std::string_view name, Kind& out) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    // Struct is not a type name on its own; structures are named by declaration.
    if (kKindNames[i] == name && static_cast<Kind>(i) != Kind::Struct) {
      out = static_cast<Kind>(i);
      return true;
    }
  }
  return false;
}

ClosureObject::ClosureObject(std::uint32_t i, std::string n, std::vector<Value> c)
    : index(i), name(std::move(n)), captures(std::move(c)) {}
TupleObject::TupleObject(std::vector<Value> v) : items(std::move(v)) {}
ListObject::ListObject(std::vector<Value> v) : items(std::move(v)) {}
StructObject::StructObject(const StructType* t, std::vector<Value> f) : type(t), fields(std::move(f)) {}
DynamicObjectData::DynamicObjectData(const Shape* s) : shape(s) {}

Value Value::str(std::string text) {
  return Value(Kind::Str, std::make_shared<StrObject>(std::move(text)));
}
Value Value::function(std::uint32_t index, std::string name) {
  return Value(Kind::FunctionRef, std::make_shared<FunctionObject>(index, std::move(name)));
}
Value Value::closure(std::uint32_t index, std::string name, std::vector<Value> captures) {
  return Value(Kind::Closure,
               std::make_shared<ClosureObject>(index, std::move(name), std::move(captures)));
}
Value Value::tuple(std::vector<Value> items) {
  return Value(Kind::Tuple, std::make_shared<TupleObject>(std::move(items)));
}
Value Value::list(std::vector<Value> items) {
  return Value(Kind::List, std::make_shared<ListObject>(std::move(items)));
}
Value Value::structure(const StructType* type, std::vector<Value> fields) {
  return Value(Kind::Struct, std::make_shared<StructObject>(type, std::move(fields)));
}
Value Value::dynamic_object(const Shape* root) {
  return Value(Kind::DynamicObject, std::make_shared<DynamicObjectData>(root));
}

std::span<const Value> Value::items() const {
  if (kind_ == Kind::Tuple) return as_tuple().items;
  if (kind_ == Kind::List) return as_list().items;
  return {};
}

bool values_equal(const Value& a, const Value& b) {
  if (a.is_numeric() && b.is_numeric()) {
    if (a.is(Kind::Double) || b.is(Kind::Double)) return to_double(a) == to_double(b);
    const std::int64_t x = a.is(Kind::Int) ? a.as_int() : a.as_long();
    const std::int64_t y = b.is(Kind::Int) ? b.as_int() : b.as_long();
    return x == y;
  }
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Null: return true;
    case Kind::Bool: return a.as_bool() == b.as_bool();
    case Kind::Str: return a.as_str() == b.as_str();
    case Kind::FunctionRef: return a.as_function().index == b.as_function().index;
    case Kind::Tuple: {
      const auto& x = a.as_tuple().items;
      const auto& y = b.as_tuple().items;
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!values_equal(x[i], y[i])) return false;
      }
      return true;
    }
    default: return a.identity() == b.identity();
  }
}

bool same_constant(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Null: return true;
    case Kind::Bool: return a.as_bool() == b.as_bool();
    case Kind::Int: return a.as_int() == b.as_int();
    case Kind::Long: return a.as_long() == b.as_long();
    case Kind::Double:
      return std::bit_cast<std::uint64_t>(a.as_double()) ==
             std::bit_cast<std::uint64_t>(b.as_double());
    case Kind::Str: return a.as_str() == b.as_str();
    case Kind::FunctionRef: return a.as_function().index == b.as_function().index;
    default: return a.identity() == b.identity();
  }
}

}  // namespace minigolo
