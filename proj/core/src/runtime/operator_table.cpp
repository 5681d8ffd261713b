#include <type_traits>

#include "minigolo/runtime/numeric.hpp"
#include "minigolo/runtime/operators.hpp"
#include "minigolo/runtime/render.hpp"
#include "minigolo/runtime/targets.hpp"

namespace minigolo {

namespace {

template <Kind K>
using repr_t = std::conditional_t<K == Kind::Int, std::int32_t,
                                  std::conditional_t<K == Kind::Long, std::int64_t, double>>;

template <Kind L, Kind R>
using promoted_t = std::conditional_t<
    L == Kind::Double || R == Kind::Double, double,
    std::conditional_t<L == Kind::Long || R == Kind::Long, std::int64_t, std::int32_t>>;

template <Kind K>
repr_t<K> read(const Value& v) {
  if constexpr (K == Kind::Int) {
    return v.as_int();
  } else if constexpr (K == Kind::Long) {
    return v.as_long();
  } else {
    return v.as_double();
  }
}

template <BinaryOp Op, Kind L, Kind R>
Value numeric_method(const Value& a, const Value& b) {
  using T = promoted_t<L, R>;
  auto result = numeric::apply<Op, T>(static_cast<T>(read<L>(a)), static_cast<T>(read<R>(b)));
  if constexpr (std::is_same_v<decltype(result), bool>) {
    return Value::boolean(result);
  } else {
    return numeric::make<T>(result);
  }
}

template <BinaryOp Op>
void add_numeric(std::vector<OperatorMethod>& table) {
  const std::string name(operator_name(Op));
  table.push_back({name, Kind::Int, Kind::Int, &numeric_method<Op, Kind::Int, Kind::Int>});
  table.push_back({name, Kind::Int, Kind::Long, &numeric_method<Op, Kind::Int, Kind::Long>});
  table.push_back({name, Kind::Int, Kind::Double, &numeric_method<Op, Kind::Int, Kind::Double>});
  table.push_back({name, Kind::Long, Kind::Int, &numeric_method<Op, Kind::Long, Kind::Int>});
  table.push_back({name, Kind::Long, Kind::Long, &numeric_method<Op, Kind::Long, Kind::Long>});
  table.push_back({name, Kind::Long, Kind::Double, &numeric_method<Op, Kind::Long, Kind::Double>});
  table.push_back({name, Kind::Double, Kind::Int, &numeric_method<Op, Kind::Double, Kind::Int>});
  table.push_back({name, Kind::Double, Kind::Long, &numeric_method<Op, Kind::Double, Kind::Long>});
  table.push_back(
      {name, Kind::Double, Kind::Double, &numeric_method<Op, Kind::Double, Kind::Double>});
}

Value concat(const Value& a, const Value& b) {
  std::string text;
  render_to(text, a);
  render_to(text, b);
  return Value::str(std::move(text));
}

Value generic_equals(const Value& a, const Value& b) { return Value::boolean(values_equal(a, b)); }
Value generic_not_equals(const Value& a, const Value& b) {
  return Value::boolean(!values_equal(a, b));
}

Value neg_int(const Value& v) { return Value::integer(numeric::neg(v.as_int())); }
Value neg_long(const Value& v) { return Value::long_integer(numeric::neg(v.as_long())); }
Value neg_double(const Value& v) { return Value::real(-v.as_double()); }
Value not_bool(const Value& v) { return Value::boolean(!v.as_bool()); }

class OperatorTarget final : public DirectTarget {
 public:
  explicit OperatorTarget(const OperatorMethod& method) : method_(method) {}
  Value invoke(std::span<const Value> args, Runtime&) const override {
    return method_.fn(args[0], args[1]);
  }
  std::string describe() const override {
    return method_.name + "(" + std::string(kind_name(method_.left)) + ", " +
           std::string(kind_name(method_.right)) + ")";
  }

 private:
  OperatorMethod method_;
};

class UnaryOperatorTarget final : public DirectTarget {
 public:
  explicit UnaryOperatorTarget(const UnaryOperatorMethod& method) : method_(method) {}
  Value invoke(std::span<const Value> args, Runtime&) const override {
    return method_.fn(args[0]);
  }
  std::string describe() const override {
    return method_.name + "(" + std::string(kind_name(method_.operand)) + ")";
  }

 private:
  UnaryOperatorMethod method_;
};

}  // namespace

const std::vector<OperatorMethod>& operator_methods() {
  static const std::vector<OperatorMethod> table = [] {
    std::vector<OperatorMethod> t;
    add_numeric<BinaryOp::Plus>(t);
    add_numeric<BinaryOp::Minus>(t);
    add_numeric<BinaryOp::Times>(t);
    add_numeric<BinaryOp::Divide>(t);
    add_numeric<BinaryOp::Modulo>(t);
    add_numeric<BinaryOp::Equals>(t);
    add_numeric<BinaryOp::NotEquals>(t);
    add_numeric<BinaryOp::Less>(t);
    add_numeric<BinaryOp::LessOrEquals>(t);
    add_numeric<BinaryOp::More>(t);
    add_numeric<BinaryOp::MoreOrEquals>(t);
    const std::string plus(operator_name(BinaryOp::Plus));
    for (std::size_t k = 0; k < kKindCount; ++k) {
      t.push_back({plus, Kind::Str, static_cast<Kind>(k), &concat});
      if (static_cast<Kind>(k) != Kind::Str) t.push_back({plus, static_cast<Kind>(k), Kind::Str, &concat});
    }
    return t;
  }();
  return table;
}

const std::vector<UnaryOperatorMethod>& unary_operator_methods() {
  static const std::vector<UnaryOperatorMethod> table = {
      {"neg", Kind::Int, &neg_int},
      {"neg", Kind::Long, &neg_long},
      {"neg", Kind::Double, &neg_double},
      {"not", Kind::Bool, &not_bool},
  };
  return table;
}

Linkage link_operator(BinaryOp op, const Value& a, const Value& b) {
  const Discriminator guard = Discriminator::kinds(a.kind(), b.kind());
  // Lookup by name and exact signature, the way a method handle is found.
  const std::string name(operator_name(op));
  for (const auto& method : operator_methods()) {
    if (method.name == name && method.left == a.kind() && method.right == b.kind()) {
      return {guard, std::make_shared<OperatorTarget>(method)};
    }
  }
  if (op == BinaryOp::Equals || op == BinaryOp::NotEquals) {
    OperatorMethod generic{name, a.kind(), b.kind(),
                           op == BinaryOp::Equals ? &generic_equals : &generic_not_equals};
    return {guard, std::make_shared<OperatorTarget>(generic)};
  }
  throw_operator_mismatch(op, a.kind(), b.kind());
}

Linkage link_unary_operator(UnaryOp op, const Value& v) {
  const std::string name(operator_name(op));
  for (const auto& method : unary_operator_methods()) {
    if (method.name == name && method.operand == v.kind()) {
      return {Discriminator::of(GuardKey::of_kind(v.kind())),
              std::make_shared<UnaryOperatorTarget>(method)};
    }
  }
  throw RuntimeError(ErrorKind::TypeMismatch, name + "(" + std::string(kind_name(v.kind())) + ")");
}

}  // namespace minigolo
