#include <doctest.h>

#include <random>
#include <sstream>

#include "minigolo/bytecode/code_image.hpp"
#include "minigolo/pipeline.hpp"
#include "minigolo/runtime/operators.hpp"
#include "minigolo/runtime/render.hpp"
#include "minigolo/runtime/shape.hpp"
#include "minigolo/runtime/targets.hpp"
#include "minigolo/support/errors.hpp"
#include "minigolo/vm/vm.hpp"

using namespace minigolo;

namespace {

Value call_target(const Linkage& l, std::vector<Value> args, Runtime& rt) { return l.target->invoke(args, rt); }

struct Program {
  explicit Program(std::string_view src) : image(bytecode::compile(compile_source(src).lifted)) {}
  bytecode::CodeImage image;
  std::ostringstream out;
  vm::Vm machine{image, {}, out};
};

const char* kModel = R"(module m
struct Point = { x, y }
augment Point {
  function norm2 = |p| -> p: x() * p: x() + p: y() * p: y()
}
augment Int {
  function twice = |self| -> self * 2
}
augment Tuple {
  function size = |t| -> 99
}
augment Int {
  function twice = |self| -> self * 20
}
function greet = |self, who| -> "hi " + who
)";

}  // namespace

TEST_CASE("promote: widest wins") {
  CHECK(promote(Kind::Int, Kind::Long) == Kind::Long);
  CHECK(promote(Kind::Int, Kind::Int) == Kind::Int);
  CHECK(promote(Kind::Long, Kind::Double) == Kind::Double);
  CHECK_THROWS_AS(promote(Kind::Int, Kind::Str), RuntimeError);
}

TEST_CASE("promote is commutative and idempotent") {
  const Kind kinds[] = {Kind::Int, Kind::Long, Kind::Double};
  for (Kind a : kinds) {
    CHECK(promote(a, a) == a);
    for (Kind b : kinds) CHECK(promote(a, b) == promote(b, a));
  }
}

TEST_CASE("plus examples") {
  const Value r = apply_operator(BinaryOp::Plus, Value::integer(10), Value::long_integer(10));
  CHECK(r.kind() == Kind::Long);
  CHECK(r.as_long() == 20);
  const Value w = apply_operator(BinaryOp::Plus, Value::integer(2147483647), Value::integer(1));
  CHECK(w.kind() == Kind::Int);
  CHECK(w.as_int() == -2147483647 - 1);
  CHECK(render(apply_operator(BinaryOp::Plus, Value::str("30 -> "), Value::integer(832040))) ==
        "30 -> 832040");
}

TEST_CASE("Int plus wraps like 64-bit addition reduced mod 2^32") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int32_t> dist(std::numeric_limits<std::int32_t>::min(),
                                                   std::numeric_limits<std::int32_t>::max());
  for (int i = 0; i < 1000; ++i) {
    const std::int32_t a = dist(rng), b = dist(rng);
    const std::int64_t wide = static_cast<std::int64_t>(a) + b;
    std::uint32_t low = static_cast<std::uint32_t>(static_cast<std::uint64_t>(wide) & 0xffffffffu);
    const std::int32_t expected = low >= 0x80000000u ? static_cast<std::int32_t>(static_cast<std::int64_t>(low) - 0x100000000LL)
                                                     : static_cast<std::int32_t>(low);
    CHECK(apply_operator(BinaryOp::Plus, Value::integer(a), Value::integer(b)).as_int() == expected);
  }
}

TEST_CASE("division truncates and modulo takes the dividend's sign") {
  CHECK(apply_operator(BinaryOp::Divide, Value::integer(-7), Value::integer(2)).as_int() == -3);
  CHECK(apply_operator(BinaryOp::Modulo, Value::integer(-7), Value::integer(2)).as_int() == -1);
  CHECK(apply_operator(BinaryOp::Modulo, Value::integer(7), Value::integer(-2)).as_int() == 1);
  CHECK(apply_operator(BinaryOp::Divide, Value::real(7), Value::integer(2)).as_double() == 3.5);
  CHECK_THROWS_AS(apply_operator(BinaryOp::Divide, Value::integer(1), Value::integer(0)), RuntimeError);
  CHECK_THROWS_AS(apply_operator(BinaryOp::Modulo, Value::long_integer(1), Value::integer(0)), RuntimeError);
  CHECK(apply_operator(BinaryOp::Divide, Value::real(1), Value::integer(0)).as_double() ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("equality rules") {
  CHECK(apply_operator(BinaryOp::Equals, Value::integer(1), Value::long_integer(1)).as_bool());
  CHECK(apply_operator(BinaryOp::Equals, Value::str("a"), Value::str("a")).as_bool());
  CHECK(apply_operator(BinaryOp::Equals, Value::null(), Value::null()).as_bool());
  const Value l = Value::list({Value::integer(1)});
  CHECK(apply_operator(BinaryOp::Equals, l, l).as_bool());
  CHECK_FALSE(apply_operator(BinaryOp::Equals, l, Value::list({Value::integer(1)})).as_bool());
  CHECK(apply_operator(BinaryOp::Equals, Value::tuple({Value::integer(1)}), Value::tuple({Value::integer(1)}))
            .as_bool());
  CHECK(apply_operator(BinaryOp::NotEquals, Value::integer(1), Value::str("1")).as_bool());
}

TEST_CASE("type mismatch names operator and kinds") {
  try {
    apply_operator(BinaryOp::Less, Value::boolean(true), Value::boolean(false));
    FAIL("expected TypeMismatch");
  } catch (const RuntimeError& e) {
    CHECK(e.kind() == ErrorKind::TypeMismatch);
    CHECK(e.detail().find("Bool") != std::string::npos);
  }
}

TEST_CASE("render") {
  CHECK(render(Value::long_integer(832040)) == "832040");
  CHECK(render(Value::null()) == "null");
  CHECK(render(Value::tuple({Value::integer(1), Value::integer(2)})) == "[1, 2]");
  CHECK(render(Value::list({Value::integer(1)})) == "list[1]");
  CHECK(render(Value::real(0.1)) == "0.1");
  CHECK(render(Value::real(2)) == "2.0");
  CHECK(render(Value::boolean(false)) == "false");
}

TEST_CASE("shape transitions") {
  ShapeTable table;
  const Shape* x = table.define(table.root(), "x");
  CHECK(x->slot_of("x") == 0u);
  CHECK(table.define(x, "x") == x);
  const Shape* xy1 = table.define(x, "y");
  const Shape* xy2 = table.define(table.define(table.root(), "x"), "y");
  CHECK(xy1->id() == xy2->id());
  CHECK(xy1->slot_of("y") == 1u);
  CHECK(table.define(table.define(table.root(), "y"), "x")->id() != xy1->id());
}

TEST_CASE("shape sharing over random property sequences") {
  ShapeTable table;
  std::mt19937 rng(3);
  const char* names[] = {"a", "b", "c", "d"};
  auto build = [&](const std::vector<int>& seq) {
    const Shape* s = table.root();
    for (int i : seq) s = table.define(s, names[i]);
    return s;
  };
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> a(1 + rng() % 4), b(1 + rng() % 4);
    for (auto& i : a) i = static_cast<int>(rng() % 4);
    for (auto& i : b) i = static_cast<int>(rng() % 4);
    // Redefinition keeps the shape, so compare the first-definition order.
    auto order = [](const std::vector<int>& s) {
      std::vector<int> o;
      for (int i : s) {
        if (std::find(o.begin(), o.end(), i) == o.end()) o.push_back(i);
      }
      return o;
    };
    CHECK((build(a)->id() == build(b)->id()) == (order(a) == order(b)));
  }
}

TEST_CASE("method lookup tiers") {
  Program p(kModel);
  Runtime& rt = p.machine;

  const Value tuple = Value::tuple({Value::integer(30), Value::integer(34)});
  const auto map = method_lookup(rt, tuple, "map", 1);
  CHECK(map.target->describe().find("map") != std::string::npos);
  CHECK(call_target(method_lookup(rt, tuple, "size", 0), {tuple}, rt).as_int() == 2);  // builtin beats augment

  const Value point = Value::structure(p.image.program.find_struct("Point"), {Value::integer(1), Value::integer(2)});
  CHECK(call_target(method_lookup(rt, point, "x", 0), {point}, rt).as_int() == 1);
  CHECK(call_target(method_lookup(rt, point, "norm2", 0), {point}, rt).as_int() == 5);

  CHECK(call_target(method_lookup(rt, Value::integer(3), "twice", 0), {Value::integer(3)}, rt).as_int() == 60);

  try {
    method_lookup(rt, Value::integer(3), "nope", 2);
    FAIL("expected NoSuchMethod");
  } catch (const RuntimeError& e) {
    CHECK(e.kind() == ErrorKind::NoSuchMethod);
    CHECK(e.detail() == "Int.nope/2");
  }
}

TEST_CASE("dynamic object properties") {
  Program p(kModel);
  Runtime& rt = p.machine;
  Value obj = Value::dynamic_object(rt.shapes().root());
  call_target(method_lookup(rt, obj, "define", 2), {obj, Value::str("name"), Value::str("golo")}, rt);
  CHECK(render(call_target(method_lookup(rt, obj, "name", 0), {obj}, rt)) == "golo");

  const Value greet = Value::function(*p.image.program.find_function("greet"), "greet");
  call_target(method_lookup(rt, obj, "greet", 1), {obj, greet}, rt);  // argc 1 redefines
  CHECK(render(call_target(method_lookup(rt, obj, "greet", 1), {obj, Value::str("you")}, rt)) == "hi you");

  const auto link = method_lookup(rt, obj, "name", 0);
  CHECK(link.guard == Discriminator::of(GuardKey::of_shape(obj.as_object().shape->id())));
}

TEST_CASE("augmentation registry is last-wins") {
  AugmentationRegistry reg;
  reg.register_method("Int", "f", 1);
  reg.register_method("Int", "f", 2);
  CHECK(reg.find("Int", "f") == 2u);
  CHECK(reg.size() == 1);
  CHECK_FALSE(reg.find("Long", "f").has_value());
}
