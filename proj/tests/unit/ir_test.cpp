#include <doctest.h>

#include <functional>
#include <set>

#include "minigolo/frontend/parser.hpp"
#include "minigolo/ir/passes.hpp"
#include "minigolo/pipeline.hpp"
#include "minigolo/support/errors.hpp"
#include "test_support.hpp"

using namespace minigolo;

namespace {

ir::Module lowered(std::string_view src) { return lower(parse_source(src)); }

const ir::Function& function_named(const ir::Module& m, std::string_view name) {
  for (const auto& f : m.functions) {
    if (f.name == name) return f;
  }
  throw std::runtime_error("no function " + std::string(name));
}

void visit(const ir::Node& n, const std::function<void(const ir::Node&)>& f) {
  f(n);
  for (const auto& c : n.children) visit(c, f);
}

std::size_t count_kind(const ir::Module& m, ir::NodeKind kind) {
  std::size_t count = 0;
  for (const auto& f : m.functions) {
    visit(f.body, [&](const ir::Node& n) { count += n.kind == kind; });
  }
  return count;
}

std::vector<std::string> diagnostics(std::string_view src) {
  std::vector<std::string> out;
  for (const auto& d : check_references(lowered(src))) out.push_back(d.message);
  return out;
}

}  // namespace

TEST_CASE("expression-bodied function lowers to a single return") {
  const auto m = lowered("module m function f = |n| -> n");
  const auto& f = function_named(m, "f");
  CHECK(f.body.kind == ir::NodeKind::Block);
  REQUIRE(f.body.children.size() == 1);
  const auto& ret = f.body.children[0];
  CHECK(ret.kind == ir::NodeKind::Return);
  REQUIRE(ret.children.size() == 1);
  CHECK(ret.children[0].kind == ir::NodeKind::Ref);
  CHECK(ret.children[0].name == "n");
}

TEST_CASE("fib lowers to an if/return tree with recursive calls") {
  const auto m = lowered(R"(module m
local function fib = |n| {
  if n <= 1 {
    return n
  } else {
    return fib(n - 1) + fib(n - 2)
  }
})");
  const auto& fib = function_named(m, "fib");
  CHECK(fib.local);
  REQUIRE(fib.body.children.size() == 1);
  CHECK(fib.body.children[0].kind == ir::NodeKind::If);
  std::size_t calls = 0;
  visit(fib.body, [&](const ir::Node& n) { calls += n.kind == ir::NodeKind::Call && n.name == "fib"; });
  CHECK(calls == 2);
}

TEST_CASE("lowering preserves positions") {
  const auto m = lowered("module m\nfunction f = |n| {\n  let x = n\n  return x\n}");
  const auto& body = function_named(m, "f").body;
  CHECK(body.children[0].kind == ir::NodeKind::Let);
  CHECK(body.children[0].pos.line == 3);
  CHECK(body.children[0].pos.column == 3);
  CHECK(body.children[1].pos.line == 4);
}

TEST_CASE("undeclared reference is reported with its name and position") {
  const auto m = lowered("module m\nfunction f = |n| -> m");
  const auto diags = check_references(m);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].message == "undeclared reference: m");
  CHECK(diags[0].pos.line == 2);
  CHECK(diags[0].pos.column == 21);
}

TEST_CASE("fib module checks clean") {
  CHECK(diagnostics(R"(module m
local function fib = |n| {
  if n <= 1 { return n } else { return fib(n - 1) + fib(n - 2) }
}
function main = |args| { println(fib(10)) })")
            .empty());
}

TEST_CASE("imported function resolves") {
  CHECK(diagnostics("module m import gololang.Math function f = || -> abs(-1)").empty());
  CHECK(diagnostics("module m function f = || -> abs(-1)") ==
        std::vector<std::string>{"undeclared reference: abs"});
}

TEST_CASE("two imports providing a name are ambiguous") {
  const auto d = diagnostics(
      "module m import gololang.Math import gololang.Collections function f = || -> max(1, 2)");
  CHECK(d == std::vector<std::string>{"ambiguous reference: max"});
}

TEST_CASE("module functions shadow imports") {
  CHECK(diagnostics("module m import gololang.Math function max = |a, b| -> a function f = || -> max(1, 2)")
            .empty());
}

TEST_CASE("one diagnostic per offending occurrence") {
  CHECK(diagnostics("module m function f = || { println(a) println(a) b = 1 }").size() == 3);
}

TEST_CASE("immutable and duplicate bindings are rejected") {
  CHECK(diagnostics("module m function f = || { let a = 1 a = 2 }") ==
        std::vector<std::string>{"assignment to immutable binding: a"});
  CHECK(diagnostics("module m function f = || { let a = 1 let a = 2 }") ==
        std::vector<std::string>{"duplicate declaration: a"});
}

TEST_CASE("structures are callable but not values") {
  CHECK(diagnostics("module m struct P = { x } function f = || -> P(1)").empty());
  CHECK(diagnostics("module m struct P = { x } function f = || -> P").size() == 1);
}

TEST_CASE("lambda without captures lifts to __lambda$0") {
  const auto lifted = lift_closures(lowered("module m function f = || -> |x| -> x + 1"));
  const auto& lam = function_named(lifted, "__lambda$0");
  CHECK(lam.synthetic);
  CHECK(lam.params == std::vector<std::string>{"x"});
  CHECK(lam.capture_count == 0);
  CHECK(count_kind(lifted, ir::NodeKind::Lambda) == 0);
  CHECK(count_kind(lifted, ir::NodeKind::MakeClosure) == 1);
}

TEST_CASE("captured variables become leading params") {
  const auto lifted = lift_closures(lowered(R"(module m
function fib = |n| -> n
function f = |n| -> |k| -> fib(n) + k)"));
  const auto& lam = function_named(lifted, "__lambda$0");
  CHECK(lam.params == std::vector<std::string>{"n", "k"});
  CHECK(lam.capture_count == 1);
}

TEST_CASE("nested lambdas: one synthetic function per lambda, numbered in source order") {
  const auto m = lowered(R"(module m
function f = |a| {
  let g = |b| -> |c| -> a + b + c
  let h = |d| -> d
  return h(g(1))
})");
  CHECK(count_lambdas(m) == 3);
  const auto lifted = lift_closures(m);
  std::size_t synthetic = 0;
  for (const auto& fn : lifted.functions) synthetic += fn.synthetic;
  CHECK(synthetic == 3);
  // Offsets: outer g lambda, its inner lambda, then h.
  CHECK(function_named(lifted, "__lambda$0").params == std::vector<std::string>{"a", "b"});
  CHECK(function_named(lifted, "__lambda$1").params == std::vector<std::string>{"a", "b", "c"});
  CHECK(function_named(lifted, "__lambda$2").params == std::vector<std::string>{"d"});
  CHECK(count_kind(lifted, ir::NodeKind::Lambda) == 0);
}

TEST_CASE("assigning a captured variable is a capture error") {
  const auto m = lowered("module m function f = || { var n = 1 let g = || { n = 2 } }");
  CHECK(check_references(m).empty());
  CHECK_THROWS_AS(lift_closures(m), CompileError);
}

TEST_CASE("synthetic naming is deterministic") {
  const std::string src = testing::read_file(testing::corpus_dir() / "ok/18_nested_closures.golo");
  CHECK(render_ir(compile_source(src).lifted) == render_ir(compile_source(src).lifted));
}

TEST_CASE("slot allocation: params first, then bindings") {
  const auto lifted = lift_closures(lowered("module m function f = |a, b| { let c = a return c }"));
  const auto f = allocate_slots(function_named(lifted, "f"));
  CHECK(f.local_slots == 3);
  const auto& let = f.body.children[0];
  CHECK(let.slot == 2);
  CHECK(let.children[0].binding == ir::Binding::Local);
  CHECK(let.children[0].slot == 0);
}

TEST_CASE("function without locals has params-many slots") {
  const auto lifted = lift_closures(lowered("module m function f = |a, b, c| -> a"));
  CHECK(allocate_slots(function_named(lifted, "f")).local_slots == 3);
}

TEST_CASE("shadowing bindings get distinct slots") {
  const auto lifted = lift_closures(lowered(R"(module m
function f = || {
  let x = 1
  if true { let x = 2 }
  if true { let x = 3 }
})"));
  const auto f = allocate_slots(function_named(lifted, "f"));
  CHECK(f.local_slots == 3);
  std::set<std::int32_t> slots;
  visit(f.body, [&](const ir::Node& n) {
    if (n.kind == ir::NodeKind::Let) slots.insert(n.slot);
  });
  CHECK(slots == std::set<std::int32_t>{0, 1, 2});
}

TEST_CASE("corpus: ok programs check clean and lift completely") {
  for (const auto& file : testing::corpus_files("ok")) {
    const auto c = compile_source(testing::read_file(file));
    CHECK_MESSAGE(count_kind(c.lifted, ir::NodeKind::Lambda) == 0, file.filename().string());
    std::size_t synthetic = 0;
    for (const auto& fn : c.lifted.functions) {
      synthetic += fn.synthetic;
      CHECK(fn.capture_count <= fn.params.size());
      if (!fn.synthetic) CHECK(fn.capture_count == 0);
      std::set<std::int32_t> binding_slots;
      visit(fn.body, [&](const ir::Node& n) {
        if (n.kind == ir::NodeKind::Let || n.kind == ir::NodeKind::Var) {
          CHECK(n.slot >= static_cast<std::int32_t>(fn.params.size()));
          CHECK(binding_slots.insert(n.slot).second);
        }
        if (n.binding == ir::Binding::Local) {
          CHECK(n.slot >= 0);
          CHECK(n.slot < static_cast<std::int32_t>(fn.local_slots));
        }
      });
    }
    CHECK(synthetic == count_lambdas(c.checked));
  }
}

TEST_CASE("corpus: bad-ref programs name the offending identifier") {
  const auto files = testing::corpus_files("bad-ref");
  CHECK(files.size() >= 5);
  for (const auto& file : files) {
    const std::string src = testing::read_file(file);
    const std::string ident = src.substr(10, src.find(' ', 10) - 10);  // "# expect: <ident> <line>"
    const auto diags = check_references(lowered(src));
    REQUIRE_MESSAGE(!diags.empty(), file.filename().string());
    CHECK(diags[0].message.find(ident) != std::string::npos);
  }
}
