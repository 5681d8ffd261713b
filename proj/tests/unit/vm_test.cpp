#include <doctest.h>

#include "minigolo/bytecode/code_image.hpp"
#include "minigolo/pipeline.hpp"
#include "minigolo/support/errors.hpp"
#include "minigolo/vm/vm.hpp"
#include "test_support.hpp"

using namespace minigolo;

namespace {

const char* kPrograms = R"(module m
function fib = |n| {
  if n <= 1 {
    return n
  }
  return fib(n - 1) + fib(n - 2)
}
function gcd = |a, b| {
  var x = a
  var y = b
  while y != 0 {
    let t = x % y
    x = y
    y = t
  }
  return x
}
function id = |x| -> x
function nothing = || { }
function down = |n| -> down(n + 1)
function cond = |c| {
  if c { return 1 }
  return 0
}
function both = |a, b| -> a and b
function capture = |n| {
  let f = || -> fib(n)
  return f()
}
)";

struct Fixture {
  bytecode::CodeImage image = bytecode::compile(compile_source(kPrograms).lifted);
  std::ostringstream out;
  vm::Vm machine{image, {}, out};

  Value call(std::string_view name, std::vector<Value> args) {
    return machine.call_function(*image.program.find_function(name), args);
  }
};

}  // namespace

TEST_CASE("fib results") {
  Fixture f;
  CHECK(f.call("fib", {Value::integer(10)}).as_int() == 55);
  CHECK(f.call("fib", {Value::integer(30)}).as_int() == 832040);
}

TEST_CASE("fib(35)") {
  Fixture f;
  const Value v = f.call("fib", {Value::integer(35)});
  CHECK(v.kind() == Kind::Int);
  CHECK(v.as_int() == 9227465);
}

TEST_CASE("gcd(1071, 462) = 21") {
  Fixture f;
  CHECK(f.call("gcd", {Value::integer(1071), Value::integer(462)}).as_int() == 21);
}

TEST_CASE("identity and fall-off return") {
  Fixture f;
  CHECK(f.call("id", {Value::integer(7)}).as_int() == 7);
  CHECK(f.call("nothing", {}).is_null());
}

TEST_CASE("closure capture runs the captured call") {
  Fixture f;
  CHECK(f.call("capture", {Value::integer(30)}).as_int() == 832040);
}

TEST_CASE("wrong argc names the function") {
  Fixture f;
  try {
    f.call("id", {});
    FAIL("expected ArityError");
  } catch (const RuntimeError& e) {
    CHECK(e.kind() == ErrorKind::ArityError);
    CHECK(e.detail().find("id") != std::string::npos);
  }
}

TEST_CASE("truthiness requires Bool") {
  CHECK_NOTHROW(vm::truthiness_check(Value::boolean(true)));
  CHECK(vm::truthiness_check(Value::boolean(true)));
  CHECK_FALSE(vm::truthiness_check(Value::boolean(false)));
  CHECK_THROWS_AS(vm::truthiness_check(Value::integer(1)), RuntimeError);
  CHECK_THROWS_AS(vm::truthiness_check(Value::null()), RuntimeError);
  Fixture f;
  CHECK(f.call("cond", {Value::boolean(true)}).as_int() == 1);
  try {
    f.call("cond", {Value::integer(1)});
    FAIL("expected TypeMismatch");
  } catch (const RuntimeError& e) {
    CHECK(e.kind() == ErrorKind::TypeMismatch);
  }
  CHECK_THROWS_AS(f.call("both", {Value::boolean(true), Value::integer(1)}), RuntimeError);
}

TEST_CASE("recursion past the depth limit is a StackOverflow") {
  bytecode::CodeImage image = bytecode::compile(compile_source(kPrograms).lifted);
  std::ostringstream out;
  vm::Vm machine(image, {DispatchPolicy::mono(), 1000}, out);
  try {
    machine.call_function(*image.program.find_function("down"), std::vector<Value>{Value::integer(0)});
    FAIL("expected StackOverflow");
  } catch (const RuntimeError& e) {
    CHECK(e.kind() == ErrorKind::StackOverflow);
    CHECK(e.trace().front().function == "down");
  }
}

TEST_CASE("depth limit is exact") {
  const auto image = bytecode::compile(compile_source(R"(module m
function depth = |n| {
  if n == 0 { return 0 }
  return depth(n - 1) + 1
})").lifted);
  std::ostringstream out;
  vm::Vm machine(image, {DispatchPolicy::mono(), 100}, out);
  const auto index = *image.program.find_function("depth");
  CHECK(machine.call_function(index, std::vector<Value>{Value::integer(99)}).as_int() == 99);
  CHECK_THROWS_AS(machine.call_function(index, std::vector<Value>{Value::integer(100)}), RuntimeError);
}

TEST_CASE("runtime errors report kind, detail and an instruction trace") {
  const auto r = testing::run(testing::read_file(testing::corpus_dir() / "ok/32_error_div_zero.golo"));
  CHECK(r.exit_code == 1);
  CHECK(r.err.rfind("error: DivisionByZero: ", 0) == 0);
  CHECK(r.err.find("  at divide (instr ") != std::string::npos);
  CHECK(r.err.find("  at main (instr ") != std::string::npos);
}

TEST_CASE("failures are deterministic") {
  const std::string src = testing::read_file(testing::corpus_dir() / "ok/34_error_no_method.golo");
  CHECK(testing::run(src).err == testing::run(src).err);
}

TEST_CASE("main receives its arguments as a tuple") {
  tools::RunOptions o;
  o.program_args = {"a", "b"};
  CHECK(testing::run("module m function main = |args| { println(args) }", o).out == "[a, b]\n");
  CHECK(testing::run("module m function main = || { println(1) }", o).out == "1\n");
  CHECK(testing::run("module m function f = || { }", o).exit_code == 1);
}

TEST_CASE("every policy yields the same results") {
  for (const char* p : {"mono", "poly:2", "poly:4", "none"}) {
    const auto image = bytecode::compile(compile_source(kPrograms).lifted);
    std::ostringstream out;
    vm::Vm machine(image, {DispatchPolicy::parse(p)}, out);
    CHECK(machine.call_function(*image.program.find_function("fib"), std::vector<Value>{Value::integer(15)})
              .as_int() == 610);
  }
}
