#include <doctest.h>

#include <random>

#include "minigolo/ast_engine/engine.hpp"
#include "minigolo/pipeline.hpp"
#include "minigolo/runtime/render.hpp"
#include "minigolo/support/big_stack.hpp"
#include "minigolo/support/errors.hpp"
#include "test_support.hpp"

using namespace minigolo;
using namespace minigolo::ast_engine;

namespace {

struct Engine {
  explicit Engine(std::string_view src, BuildOptions options = {})
      : compiled(compile_source(src)), tree(build_exec_tree(compiled.checked, options)), engine(*tree, {}, out) {}

  std::uint32_t index(std::string_view name) const { return *tree->program.find_function(name); }
  Typed invoke(std::string_view name, std::vector<Value> args) { return engine.invoke(index(name), args); }

  /// Nodes of `kind` inside function `name`, in build order.
  std::vector<const ExecNode*> nodes(std::string_view name, NodeKind kind) const {
    std::vector<const ExecNode*> out;
    for (const auto& ref : tree->nodes) {
      if (ref.function == index(name) && ref.node->kind() == kind) out.push_back(ref.node);
    }
    return out;
  }

  Compilation compiled;
  std::unique_ptr<ExecTree> tree;
  std::ostringstream out;
  AstEngine engine;
};

/// Turns boxing instrumentation on for one scope.
struct BoxScope {
  BoxScope() {
    boxing::count = 0;
    boxing::enabled = true;
  }
  ~BoxScope() { boxing::enabled = false; }
  std::uint64_t count() const { return boxing::count; }
};

const char* kFib = R"(module m
function fib = |n| {
  if n <= 1 {
    return n
  } else {
    return fib(n - 1) + fib(n - 2)
  }
}
function add = |a, b| -> a + b
function empty = || { }
)";

std::uint64_t naive_fib_calls(int n) { return n <= 1 ? 1 : 1 + naive_fib_calls(n - 1) + naive_fib_calls(n - 2); }

int lattice_rank(const SpecState& s) { return static_cast<int>(s.level()); }

}  // namespace

TEST_CASE("fib tree: two call nodes and the binary ops under the else branch") {
  Engine e(kFib);
  CHECK(e.nodes("fib", NodeKind::Call).size() == 2);
  // n <= 1, n - 1, n - 2, and the + joining the calls.
  CHECK(e.nodes("fib", NodeKind::BinaryOp).size() == 4);
  for (const auto& ref : e.tree->nodes) {
    CHECK(ref.node->exec_count() == 0);
    if (const auto* s = ref.node->spec_state()) CHECK(s->level() == SpecState::Level::Uninitialized);
    if (const auto* c = ref.node->cache()) {
      CHECK(c->size() == 0);
      CHECK_FALSE(c->megamorphic());
    }
  }
}

TEST_CASE("empty function builds to a lone root block") {
  Engine e(kFib);
  CHECK(e.nodes("empty", NodeKind::Block).size() == 1);
  CHECK(e.invoke("empty", {}).to_value().is_null());
}

TEST_CASE("rebuilt tree starts from zero counters") {
  Engine e(kFib);
  e.invoke("fib", {Value::integer(5)});
  const auto again = build_exec_tree(e.compiled.checked);
  for (const auto& ref : again->nodes) CHECK(ref.node->exec_count() == 0);
}

TEST_CASE("fib(30) is 832040") {
  Engine e(kFib);
  const Value v = e.invoke("fib", {Value::integer(30)}).to_value();
  CHECK(v.kind() == Kind::Int);
  CHECK(v.as_int() == 832040);
}

TEST_CASE("Int+Int fast path produces an unboxed result without boxing") {
  Engine e(kFib);
  const std::vector<Value> args{Value::integer(1), Value::integer(2)};
  Typed r;
  {
    BoxScope boxes;
    r = e.engine.invoke(e.index("add"), args);
    CHECK(boxes.count() == 0);
  }
  CHECK(r.kind == Kind::Int);
  CHECK_FALSE(r.boxed);
  CHECK(r.as_int() == 3);
  const auto* plus = e.nodes("add", NodeKind::BinaryOp).at(0);
  CHECK(plus->state() == "spec(Int,Int)");

  const Typed d = e.invoke("add", {Value::integer(1), Value::real(2.0)});
  CHECK(d.kind == Kind::Double);
  CHECK(d.as_double() == 3.0);
  CHECK(plus->state() == "generic");
}

TEST_CASE("rewrite rules") {
  const auto u = SpecState::uninitialized();
  CHECK(observe_binary(u, BinaryOp::Plus, Kind::Int, Kind::Int) == SpecState::specialized(Kind::Int, Kind::Int));
  CHECK(observe_binary(SpecState::specialized(Kind::Int, Kind::Int), BinaryOp::Plus, Kind::Long, Kind::Int) ==
        SpecState::generic());
  CHECK(observe_binary(SpecState::generic(), BinaryOp::Plus, Kind::Int, Kind::Int) == SpecState::generic());
  CHECK(observe_binary(u, BinaryOp::Plus, Kind::Str, Kind::Tuple) == SpecState::concat());
  CHECK(observe_binary(SpecState::concat(), BinaryOp::Plus, Kind::Str, Kind::Int) == SpecState::concat());
  CHECK(observe_binary(u, BinaryOp::Less, Kind::Bool, Kind::Bool) == SpecState::generic());
  CHECK(observe_binary(u, BinaryOp::Minus, Kind::Str, Kind::Int) == SpecState::generic());
}

TEST_CASE("lattice: 10^4 random kind traces stay monotone") {
  std::mt19937 rng(2024);
  const Kind kinds[] = {Kind::Int, Kind::Long, Kind::Double, Kind::Str, Kind::Bool, Kind::Null, Kind::Tuple};
  const BinaryOp ops[] = {BinaryOp::Plus, BinaryOp::Minus, BinaryOp::Less, BinaryOp::Equals, BinaryOp::Modulo};
  ExecTree tree;
  std::uint64_t violations = 0;
  for (int trace = 0; trace < 10000; ++trace) {
    SpecState state;
    const BinaryOp op = ops[rng() % std::size(ops)];
    const std::size_t length = 1 + rng() % 12;
    for (std::size_t i = 0; i < length; ++i) {
      // Bias toward repeats so that specialized states actually occur.
      const Kind l = rng() % 3 ? Kind::Int : kinds[rng() % std::size(kinds)];
      const Kind r = rng() % 3 ? Kind::Int : kinds[rng() % std::size(kinds)];
      const SpecState before = state;
      tree.transition(state, observe_binary(state, op, l, r));
      if (lattice_rank(state) < lattice_rank(before)) ++violations;
      if (before.level() == SpecState::Level::Specialized && state.level() == SpecState::Level::Specialized) {
        CHECK(state == before);
      }
      if (state.level() == SpecState::Level::Specialized) CHECK(state.matches(l, r));
    }
  }
  CHECK(violations == 0);
  CHECK(tree.lattice_violations == 0);
}

TEST_CASE("engine runs report no lattice violations on the corpus") {
  for (const auto& file : testing::corpus_files("ok")) {
    Engine e(testing::read_file(file));
    run_with_stack(kEngineStackBytes, [&] {
      try {
        e.engine.run_main();
      } catch (const RuntimeError&) {
      }
    });
    CHECK_MESSAGE(e.tree->lattice_violations == 0, file.filename().string());
  }
}

TEST_CASE("profile: fib(10) call nodes sum to calls minus the root") {
  Engine e(kFib);
  e.invoke("fib", {Value::integer(10)});
  std::uint64_t sum = 0;
  for (const auto* n : e.nodes("fib", NodeKind::Call)) sum += n->exec_count();
  CHECK(sum == naive_fib_calls(10) - 1);
  CHECK(sum == 176);
  // The root block runs once per call.
  CHECK(e.tree->functions[e.index("fib")]->body->exec_count() == naive_fib_calls(10));
}

TEST_CASE("profile format and ordering") {
  Engine e("module m\nfunction main = || {\n  let a = 1\n  let b = 2\n  println(a)\n}\n");
  e.engine.run_main();
  const std::string report = dump_profile(*e.tree);
  CHECK(report.find("1  local-write  main:3:3  state=spec(Int)\n") != std::string::npos);
  CHECK(report.find("1  local-write  main:4:3  state=spec(Int)\n") != std::string::npos);
  CHECK(report.find("1  expr-stmt  main:5:3  state=-\n") != std::string::npos);
  std::istringstream lines(report);
  std::uint64_t previous = UINT64_MAX;
  for (std::string line; std::getline(lines, line);) {
    const auto count = std::stoull(line.substr(0, line.find(' ')));
    CHECK(count <= previous);
    previous = count;
  }
}

TEST_CASE("loop body nodes count iterations") {
  Engine e("module m\nfunction main = || {\n  var i = 0\n  while i < 7 {\n    i = i + 1\n  }\n}\n");
  e.engine.run_main();
  const auto writes = e.nodes("main", NodeKind::LocalWrite);
  REQUIRE(writes.size() == 2);
  CHECK(writes[1]->exec_count() == 7);
  CHECK(e.nodes("main", NodeKind::Loop).at(0)->exec_count() == 1);
}

TEST_CASE("dispatch cache: shape hits, depth bound, megamorphic") {
  Engine e(R"(module m
function get = |o| -> o: v()
function make = |names| {
  let o = DynamicObject()
  var i = 0
  while i < names: size() {
    o: define(names: get(i), i)
    i = i + 1
  }
  return o
}
)");
  auto make = [&](std::vector<std::string> names) {
    std::vector<Value> items;
    for (auto& n : names) items.push_back(Value::str(n));
    return e.invoke("make", {Value::tuple(items)}).to_value();
  };
  const auto* site = e.nodes("get", NodeKind::MethodCall).at(0);
  e.invoke("get", {make({"v"})});
  e.invoke("get", {make({"v"})});
  CHECK(site->cache()->hits() == 1);
  CHECK(site->cache()->size() == 1);
  e.invoke("get", {make({"a", "v"})});
  e.invoke("get", {make({"b", "v"})});
  CHECK(site->cache()->size() == 3);
  CHECK_FALSE(site->cache()->megamorphic());
  e.invoke("get", {make({"c", "v"})});
  CHECK(site->cache()->megamorphic());
  CHECK(site->cache()->size() == 0);
  CHECK(site->state() == "mega");
  e.invoke("get", {make({"v"})});
  CHECK(site->cache()->size() == 0);
}

TEST_CASE("struct getter cached by type hits on every later instance") {
  Engine e("module m struct P = { x } function get = |p| -> p: x() function mk = |v| -> P(v)");
  const auto* site = e.nodes("get", NodeKind::MethodCall).at(0);
  for (int i = 0; i < 4; ++i) {
    const Value p = e.invoke("mk", {Value::integer(i)}).to_value();
    CHECK(e.invoke("get", {p}).as_int() == i);
  }
  CHECK(site->cache()->misses() == 1);
  CHECK(site->cache()->hits() == 3);
}

TEST_CASE("no-specialize pins nodes generic and caches megamorphic") {
  Engine e(kFib, {false, 3});
  e.invoke("fib", {Value::integer(6)});
  for (const auto& ref : e.tree->nodes) {
    if (const auto* s = ref.node->spec_state()) CHECK(s->level() == SpecState::Level::Generic);
    if (const auto* c = ref.node->cache()) CHECK(c->megamorphic());
  }
}

TEST_CASE("boxing: a gcd loop boxes nothing when specialized and every step when generic") {
  const std::string src = R"(module m
function main = || {
  var a = 832040
  var b = 514229
  var steps = 0
  while steps < 10000 {
    if b == 0 {
      a = 832040
      b = 514229
    }
    let t = a % b
    a = b
    b = t
    steps = steps + 1
  }
  println(steps == 10000)
}
)";
  for (bool specialize : {true, false}) {
    tools::RunOptions o;
    o.engine = tools::Engine::Ast;
    o.specialize = specialize;
    o.instrument_boxing = true;
    const auto r = testing::run(src, o);
    CHECK(r.out == "true\n");
    const auto at = r.err.find("boxed-allocations: ");
    REQUIRE(at != std::string::npos);
    const auto boxes = std::stoull(r.err.substr(at + 19));
    if (specialize) {
      CHECK(boxes == 0);
    } else {
      CHECK(boxes >= 10000);
    }
  }
}

TEST_CASE("errors carry line:col traces") {
  tools::RunOptions o;
  o.engine = tools::Engine::Ast;
  const auto r = testing::run(testing::read_file(testing::corpus_dir() / "ok/32_error_div_zero.golo"), o);
  CHECK(r.exit_code == 1);
  CHECK(r.err.rfind("error: DivisionByZero: ", 0) == 0);
  CHECK(r.err.find("  at divide (3:") != std::string::npos);
}

TEST_CASE("rewrite keeps the triggering evaluation's result") {
  Engine e(kFib);
  e.invoke("add", {Value::integer(2), Value::integer(3)});
  CHECK(render(e.invoke("add", {Value::str("a"), Value::integer(3)}).to_value()) == "a3");
  CHECK(e.invoke("add", {Value::long_integer(2), Value::integer(3)}).to_value().as_long() == 5);
}

TEST_CASE("lifted IR is accepted too") {
  const auto c = compile_source(testing::read_file(testing::corpus_dir() / "ok/18_nested_closures.golo"));
  auto tree = build_exec_tree(c.lifted);
  std::ostringstream out;
  AstEngine engine(*tree, {}, out);
  engine.run_main();
  CHECK(out.str() == testing::read_file(testing::corpus_dir() / "ok/18_nested_closures.out"));
}
