#include "minigolo/runtime/natives.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>

#include "minigolo/runtime/numeric.hpp"
#include "minigolo/runtime/operators.hpp"
#include "minigolo/runtime/render.hpp"
#include "minigolo/runtime/runtime.hpp"
#include "minigolo/support/errors.hpp"

namespace minigolo {

namespace {

std::int64_t integral_arg(const Value& v, std::string_view what) {
  if (v.is(Kind::Int)) return v.as_int();
  if (v.is(Kind::Long)) return v.as_long();
  throw RuntimeError(ErrorKind::InvalidArgument,
                     std::string(what) + " expects an integer, got " + std::string(kind_name(v.kind())));
}

bool predicate_result(const Value& v) {
  if (!v.is(Kind::Bool)) {
    throw RuntimeError(ErrorKind::TypeMismatch,
                       "filter predicate returned " + std::string(kind_name(v.kind())));
  }
  return v.as_bool();
}

void require_callable(const Value& f, std::string_view method) {
  if (!f.is_callable()) {
    throw RuntimeError(ErrorKind::TypeMismatch, std::string(method) + " expects a function, got " +
                                                    std::string(kind_name(f.kind())));
  }
}

Value same_collection(const Value& receiver, std::vector<Value> items) {
  return receiver.is(Kind::List) ? Value::list(std::move(items)) : Value::tuple(std::move(items));
}

// Free functions.

Value fn_println(Runtime& rt, std::span<const Value> args) {
  rt.out() << render(args[0]) << '\n';
  return Value::null();
}

Value fn_print(Runtime& rt, std::span<const Value> args) {
  rt.out() << render(args[0]);
  return Value::null();
}

Value fn_dynamic_object(Runtime& rt, std::span<const Value>) {
  return Value::dynamic_object(rt.shapes().root());
}

Value fn_tuple(Runtime&, std::span<const Value> args) {
  return Value::tuple(std::vector<Value>(args.begin(), args.end()));
}

Value fn_range(Runtime&, std::span<const Value> args) {
  const auto from = integral_arg(args[0], "range");
  const auto to = integral_arg(args[1], "range");
  std::vector<Value> items;
  if (to > from) items.reserve(static_cast<std::size_t>(to - from));
  for (auto i = from; i < to; ++i) items.push_back(Value::integer(static_cast<std::int32_t>(i)));
  return Value::list(std::move(items));
}

Value fn_current_time_millis(Runtime&, std::span<const Value>) {
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  return Value::long_integer(std::chrono::duration_cast<std::chrono::milliseconds>(now).count());
}

// gololang.Math

Value math_abs(Runtime&, std::span<const Value> args) {
  const Value& v = args[0];
  switch (v.kind()) {
    case Kind::Int: return v.as_int() < 0 ? Value::integer(numeric::neg(v.as_int())) : v;
    case Kind::Long: return v.as_long() < 0 ? Value::long_integer(numeric::neg(v.as_long())) : v;
    case Kind::Double: return Value::real(std::abs(v.as_double()));
    default: break;
  }
  throw RuntimeError(ErrorKind::NotNumeric, "abs(" + std::string(kind_name(v.kind())) + ")");
}

Value math_max(Runtime&, std::span<const Value> args) {
  return apply_operator(BinaryOp::Less, args[0], args[1]).as_bool() ? args[1] : args[0];
}

Value math_min(Runtime&, std::span<const Value> args) {
  return apply_operator(BinaryOp::More, args[0], args[1]).as_bool() ? args[1] : args[0];
}

// gololang.Collections

std::span<const Value> collection_arg(const Value& v, std::string_view what) {
  if (!v.is(Kind::Tuple) && !v.is(Kind::List)) {
    throw RuntimeError(ErrorKind::InvalidArgument, std::string(what) + " expects a collection, got " +
                                                       std::string(kind_name(v.kind())));
  }
  return v.items();
}

Value fold_extreme(std::span<const Value> items, BinaryOp replace_when, std::string_view what) {
  if (items.empty()) throw RuntimeError(ErrorKind::InvalidArgument, std::string(what) + " of empty collection");
  Value best = items[0];
  for (const auto& v : items.subspan(1)) {
    if (apply_operator(replace_when, v, best).as_bool()) best = v;
  }
  return best;
}

Value coll_max(Runtime&, std::span<const Value> args) {
  return fold_extreme(collection_arg(args[0], "max"), BinaryOp::More, "max");
}

Value coll_min(Runtime&, std::span<const Value> args) {
  return fold_extreme(collection_arg(args[0], "min"), BinaryOp::Less, "min");
}

Value coll_sum(Runtime&, std::span<const Value> args) {
  Value total = Value::integer(0);
  for (const auto& v : collection_arg(args[0], "sum")) total = apply_operator(BinaryOp::Plus, total, v);
  return total;
}

// Collection methods. args[0] is the receiver.

Value m_size(Runtime&, std::span<const Value> args) {
  return Value::integer(static_cast<std::int32_t>(args[0].items().size()));
}

Value m_is_empty(Runtime&, std::span<const Value> args) {
  return Value::boolean(args[0].items().empty());
}

std::size_t checked_index(const Value& receiver, const Value& index) {
  const auto i = integral_arg(index, "get");
  const auto size = receiver.items().size();
  if (i < 0 || static_cast<std::uint64_t>(i) >= size) {
    throw RuntimeError(ErrorKind::IndexOutOfBounds,
                       "index " + std::to_string(i) + " out of bounds for size " + std::to_string(size));
  }
  return static_cast<std::size_t>(i);
}

Value m_get(Runtime&, std::span<const Value> args) {
  return args[0].items()[checked_index(args[0], args[1])];
}

Value m_map(Runtime& rt, std::span<const Value> args) {
  const Value& f = args[1];
  require_callable(f, "map");
  // Copy first: the callback may mutate a list receiver.
  const std::vector<Value> source(args[0].items().begin(), args[0].items().end());
  std::vector<Value> out;
  out.reserve(source.size());
  for (const auto& item : source) {
    const Value arg[1] = {item};
    out.push_back(rt.call_value(f, arg));
  }
  return same_collection(args[0], std::move(out));
}

Value m_filter(Runtime& rt, std::span<const Value> args) {
  const Value& f = args[1];
  require_callable(f, "filter");
  const std::vector<Value> source(args[0].items().begin(), args[0].items().end());
  std::vector<Value> out;
  for (const auto& item : source) {
    const Value arg[1] = {item};
    if (predicate_result(rt.call_value(f, arg))) out.push_back(item);
  }
  return same_collection(args[0], std::move(out));
}

Value m_reduce(Runtime& rt, std::span<const Value> args) {
  const Value& f = args[2];
  require_callable(f, "reduce");
  const std::vector<Value> source(args[0].items().begin(), args[0].items().end());
  Value acc = args[1];
  for (const auto& item : source) {
    const Value call_args[2] = {acc, item};
    acc = rt.call_value(f, call_args);
  }
  return acc;
}

Value m_add(Runtime&, std::span<const Value> args) {
  args[0].as_list().items.push_back(args[1]);
  return args[0];
}

Value m_set(Runtime&, std::span<const Value> args) {
  const auto i = checked_index(args[0], args[1]);
  args[0].as_list().items[i] = args[2];
  return args[0];
}

// Strings.

Value m_length(Runtime&, std::span<const Value> args) {
  return Value::integer(static_cast<std::int32_t>(args[0].as_str().size()));
}

Value m_to_upper(Runtime&, std::span<const Value> args) {
  std::string text = args[0].as_str();
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return Value::str(std::move(text));
}

// Numeric conversions: integral narrowing wraps, doubles narrow Java-style.

Value m_to_double(Runtime&, std::span<const Value> args) {
  return Value::real(numeric::get<double>(args[0]));
}

Value m_to_int(Runtime&, std::span<const Value> args) {
  const Value& v = args[0];
  if (v.is(Kind::Double)) return Value::integer(numeric::from_double<std::int32_t>(v.as_double()));
  return Value::integer(static_cast<std::int32_t>(numeric::get<std::int64_t>(v)));
}

Value m_to_long(Runtime&, std::span<const Value> args) {
  const Value& v = args[0];
  if (v.is(Kind::Double)) return Value::long_integer(numeric::from_double<std::int64_t>(v.as_double()));
  return Value::long_integer(numeric::get<std::int64_t>(v));
}

// Dynamic objects.

Value m_define(Runtime& rt, std::span<const Value> args) {
  if (!args[1].is(Kind::Str)) {
    throw RuntimeError(ErrorKind::InvalidArgument, "define expects a Str property name, got " +
                                                       std::string(kind_name(args[1].kind())));
  }
  auto& object = args[0].as_object();
  const Shape* next = rt.shapes().define(object.shape, args[1].as_str());
  const auto slot = *next->slot_of(args[1].as_str());
  if (slot >= object.slots.size()) object.slots.resize(slot + 1);
  object.shape = next;
  object.slots[slot] = args[2];
  return args[0];
}

constexpr std::array kBuiltinFunctions = {
    NativeFunction{"", "println", 1, &fn_println},
    NativeFunction{"", "print", 1, &fn_print},
    NativeFunction{"", "DynamicObject", 0, &fn_dynamic_object},
    NativeFunction{"", "tuple", kVariadic, &fn_tuple},
    NativeFunction{"", "range", 2, &fn_range},
    NativeFunction{"", "currentTimeMillis", 0, &fn_current_time_millis},
};

constexpr std::array kMathFunctions = {
    NativeFunction{"gololang.Math", "abs", 1, &math_abs},
    NativeFunction{"gololang.Math", "max", 2, &math_max},
    NativeFunction{"gololang.Math", "min", 2, &math_min},
};

constexpr std::array kCollectionsFunctions = {
    NativeFunction{"gololang.Collections", "max", 1, &coll_max},
    NativeFunction{"gololang.Collections", "min", 1, &coll_min},
    NativeFunction{"gololang.Collections", "sum", 1, &coll_sum},
};

const std::array kLibraryModules = {
    LibraryModule{"gololang.Math", kMathFunctions},
    LibraryModule{"gololang.Collections", kCollectionsFunctions},
};

constexpr std::array kBuiltinMethods = {
    BuiltinMethod{Kind::Tuple, "size", 0, &m_size},
    BuiltinMethod{Kind::Tuple, "get", 1, &m_get},
    BuiltinMethod{Kind::Tuple, "isEmpty", 0, &m_is_empty},
    BuiltinMethod{Kind::Tuple, "map", 1, &m_map},
    BuiltinMethod{Kind::Tuple, "filter", 1, &m_filter},
    BuiltinMethod{Kind::Tuple, "reduce", 2, &m_reduce},
    BuiltinMethod{Kind::List, "size", 0, &m_size},
    BuiltinMethod{Kind::List, "get", 1, &m_get},
    BuiltinMethod{Kind::List, "isEmpty", 0, &m_is_empty},
    BuiltinMethod{Kind::List, "map", 1, &m_map},
    BuiltinMethod{Kind::List, "filter", 1, &m_filter},
    BuiltinMethod{Kind::List, "reduce", 2, &m_reduce},
    BuiltinMethod{Kind::List, "add", 1, &m_add},
    BuiltinMethod{Kind::List, "set", 2, &m_set},
    BuiltinMethod{Kind::Str, "length", 0, &m_length},
    BuiltinMethod{Kind::Str, "toUpperCase", 0, &m_to_upper},
    BuiltinMethod{Kind::Int, "toDouble", 0, &m_to_double},
    BuiltinMethod{Kind::Int, "toInt", 0, &m_to_int},
    BuiltinMethod{Kind::Int, "toLong", 0, &m_to_long},
    BuiltinMethod{Kind::Long, "toDouble", 0, &m_to_double},
    BuiltinMethod{Kind::Long, "toInt", 0, &m_to_int},
    BuiltinMethod{Kind::Long, "toLong", 0, &m_to_long},
    BuiltinMethod{Kind::Double, "toDouble", 0, &m_to_double},
    BuiltinMethod{Kind::Double, "toInt", 0, &m_to_int},
    BuiltinMethod{Kind::Double, "toLong", 0, &m_to_long},
    BuiltinMethod{Kind::DynamicObject, "define", 2, &m_define},
};

}  // namespace

std::span<const NativeFunction> builtin_functions() { return kBuiltinFunctions; }

const NativeFunction* find_builtin_function(std::string_view name) {
  for (const auto& fn : kBuiltinFunctions) {
    if (fn.name == name) return &fn;
  }
  return nullptr;
}

std::span<const LibraryModule> library_modules() { return kLibraryModules; }

const LibraryModule* find_library_module(std::string_view name) {
  for (const auto& m : kLibraryModules) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const NativeFunction* find_library_function(const LibraryModule& module, std::string_view name) {
  for (const auto& fn : module.functions) {
    if (fn.name == name) return &fn;
  }
  return nullptr;
}

const BuiltinMethod* find_builtin_method(Kind receiver, std::string_view name, std::size_t argc) {
  for (const auto& m : kBuiltinMethods) {
    if (m.receiver == receiver && m.name == name && static_cast<std::size_t>(m.argc) == argc) return &m;
  }
  return nullptr;
}

std::span<const BuiltinMethod> builtin_methods() { return kBuiltinMethods; }

}  // namespace minigolo
