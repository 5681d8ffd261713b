#include <doctest.h>

#include <random>

#include "minigolo/bytecode/code_image.hpp"
#include "minigolo/dispatch/call_site.hpp"
#include "minigolo/pipeline.hpp"
#include "minigolo/runtime/operators.hpp"
#include "minigolo/vm/vm.hpp"
#include "test_support.hpp"

using namespace minigolo;

namespace {

/// Any runtime works for operator sites; this one also offers `f` for function sites.
struct Env {
  bytecode::CodeImage image = bytecode::compile(compile_source("module m function f = |a| -> a").lifted);
  std::ostringstream out;
  vm::Vm machine{image, {}, out};
};

Value plus(CallSite& site, Runtime& rt, Value a, Value b) {
  const Value args[] = {std::move(a), std::move(b)};
  return site.invoke(args, rt);
}

void check_stats(const SiteStats& s, std::uint64_t hits, std::uint64_t misses, std::uint64_t relinks,
                 std::size_t depth, bool mega) {
  CHECK(s.hits == hits);
  CHECK(s.misses == misses);
  CHECK(s.relinks == relinks);
  CHECK(s.depth == depth);
  CHECK(s.megamorphic == mega);
}

/// Guards of a chain, head first.
std::vector<Discriminator> guards(const CallSite& site) {
  std::vector<Discriminator> out;
  const Handle* h = site.chain().get();
  while (const auto* g = dynamic_cast<const GuardedHandle*>(h)) {
    out.push_back(g->guard());
    h = g->next().get();
  }
  CHECK(dynamic_cast<const FallbackHandle*>(h) != nullptr);
  return out;
}

}  // namespace

TEST_CASE("policy parsing") {
  CHECK(DispatchPolicy::parse("mono").depth_bound() == 1);
  CHECK(DispatchPolicy::parse("poly:4").depth_bound() == 4);
  CHECK(DispatchPolicy::parse("none").depth_bound() == 0);
  CHECK(DispatchPolicy::parse("poly:3").to_string() == "poly:3");
  CHECK_THROWS_AS(DispatchPolicy::parse("poly:0"), std::invalid_argument);
  CHECK_THROWS_AS(DispatchPolicy::parse("poly"), std::invalid_argument);
  CHECK_THROWS_AS(DispatchPolicy::parse("mega"), std::invalid_argument);
}

TEST_CASE("unexecuted site") {
  auto site = CallSite::binary_operator(0, BinaryOp::Plus, DispatchPolicy::mono());
  check_stats(site.stats(), 0, 0, 0, 0, false);
}

TEST_CASE("bootstrap, hit, then a mono relink") {
  Env env;
  auto site = CallSite::binary_operator(0, BinaryOp::Plus, DispatchPolicy::mono());
  CHECK(plus(site, env.machine, Value::integer(1), Value::integer(2)).as_int() == 3);
  check_stats(site.stats(), 0, 1, 1, 1, false);
  plus(site, env.machine, Value::integer(1), Value::integer(2));
  check_stats(site.stats(), 1, 1, 1, 1, false);
  const Value r = plus(site, env.machine, Value::real(1.0), Value::integer(2));
  CHECK(r.kind() == Kind::Double);
  CHECK(r.as_double() == 3.0);
  check_stats(site.stats(), 1, 2, 2, 1, false);
  CHECK(guards(site) == std::vector{Discriminator::kinds(Kind::Double, Kind::Int)});
}

TEST_CASE("mono: 1000 monomorphic calls") {
  Env env;
  auto site = CallSite::binary_operator(0, BinaryOp::Plus, DispatchPolicy::mono());
  for (int i = 0; i < 1000; ++i) plus(site, env.machine, Value::integer(i), Value::integer(1));
  check_stats(site.stats(), 999, 1, 1, 1, false);
}

TEST_CASE("mono: strict alternation misses every time") {
  Env env;
  auto site = CallSite::binary_operator(0, BinaryOp::Plus, DispatchPolicy::mono());
  const int n = 50;
  for (int i = 0; i < n; ++i) {
    plus(site, env.machine, Value::integer(1), Value::integer(1));
    plus(site, env.machine, Value::real(1), Value::integer(1));
  }
  check_stats(site.stats(), 0, 2 * n, 2 * n, 1, false);
}

TEST_CASE("poly(2): two guards, then megamorphic for good") {
  Env env;
  auto site = CallSite::binary_operator(0, BinaryOp::Plus, DispatchPolicy::poly(2));
  plus(site, env.machine, Value::integer(1), Value::integer(1));
  plus(site, env.machine, Value::real(1), Value::integer(1));
  check_stats(site.stats(), 0, 2, 2, 2, false);
  CHECK(guards(site) ==
        std::vector{Discriminator::kinds(Kind::Double, Kind::Int), Discriminator::kinds(Kind::Int, Kind::Int)});
  plus(site, env.machine, Value::integer(1), Value::integer(1));
  check_stats(site.stats(), 1, 2, 2, 2, false);
  const Value third = plus(site, env.machine, Value::long_integer(1), Value::integer(1));
  CHECK(third.as_long() == 2);
  check_stats(site.stats(), 1, 3, 2, 0, true);
  for (int i = 0; i < 10; ++i) plus(site, env.machine, Value::integer(1), Value::integer(1));
  check_stats(site.stats(), 1, 13, 2, 0, true);
}

TEST_CASE("none: never links") {
  Env env;
  auto site = CallSite::binary_operator(0, BinaryOp::Plus, DispatchPolicy::none());
  for (int i = 0; i < 5; ++i) plus(site, env.machine, Value::integer(1), Value::integer(1));
  check_stats(site.stats(), 0, 5, 0, 0, false);
  CHECK(guards(site).empty());
}

TEST_CASE("random traces: conservation, depth bound, guard soundness") {
  Env env;
  std::mt19937 rng(11);
  const Value samples[] = {Value::integer(3), Value::long_integer(4), Value::real(0.5)};
  for (const char* p : {"mono", "poly:2", "poly:4", "none"}) {
    const auto policy = DispatchPolicy::parse(p);
    auto site = CallSite::binary_operator(0, BinaryOp::Times, policy);
    const int calls = 2000;
    for (int i = 0; i < calls; ++i) {
      const Value& a = samples[rng() % 3];
      const Value& b = samples[rng() % 3];
      const Value args[] = {a, b};
      const auto before = site.stats();
      const TargetPtr* cached = site.chain()->select(site.discriminator(args));
      const Value got = site.invoke(args, env.machine);
      // A guard hit happens exactly when the chain held a matching guard.
      CHECK((site.stats().hits == before.hits + 1) == (cached != nullptr));
      CHECK(values_equal(got, apply_operator(BinaryOp::Times, a, b)));
      CHECK(site.stats().depth <= policy.depth_bound());
    }
    const auto s = site.stats();
    CHECK(s.invocations() == static_cast<std::uint64_t>(calls));
    if (policy.kind == DispatchPolicy::Kind::Poly) CHECK(s.relinks <= policy.k);
  }
}

TEST_CASE("function site guards on callee identity") {
  Env env;
  auto site = CallSite::function(0, "f", 1, DispatchPolicy::mono());
  for (int i = 0; i < 3; ++i) {
    const Value args[] = {Value::integer(i)};
    CHECK(site.invoke(args, env.machine).as_int() == i);
  }
  const Value args[] = {Value::str("s")};
  site.invoke(args, env.machine);
  check_stats(site.stats(), 3, 1, 1, 1, false);
}

TEST_CASE("method site guards on shape ids") {
  Env env;
  auto site = CallSite::method(0, "v", 0, DispatchPolicy::poly(2));
  auto obj = [&](std::vector<std::string> names) {
    Value o = Value::dynamic_object(env.machine.shapes().root());
    for (const auto& n : names) {
      auto define = CallSite::method(1, "define", 2, DispatchPolicy::none());
      const Value args[] = {o, Value::str(n), Value::integer(static_cast<std::int32_t>(n.size()))};
      define.invoke(args, env.machine);
    }
    return o;
  };
  const Value a1 = obj({"v"}), a2 = obj({"v"}), b = obj({"x", "v"});
  for (const auto& o : {a1, a2, a1, b, b}) {
    const Value args[] = {o};
    site.invoke(args, env.machine);
  }
  check_stats(site.stats(), 3, 2, 2, 2, false);
}

TEST_CASE("stats dump format") {
  Env env;
  std::vector<CallSite> sites;
  sites.push_back(CallSite::binary_operator(0, BinaryOp::Plus, DispatchPolicy::mono()));
  sites.push_back(CallSite::function(1, "f", 1, DispatchPolicy::mono()));
  plus(sites[0], env.machine, Value::integer(1), Value::integer(1));
  std::ostringstream out;
  dump_site_stats(out, sites);
  CHECK(out.str() == "site=0 kind=operator name=plus hits=0 misses=1 relinks=1 depth=1 mega=false\n");
}

TEST_CASE("results are identical across policies on the corpus") {
  for (const auto& file : testing::corpus_files("ok")) {
    const std::string src = testing::read_file(file);
    std::optional<testing::Outcome> first;
    for (const char* p : {"mono", "poly:2", "poly:4", "none"}) {
      tools::RunOptions o;
      o.policy = DispatchPolicy::parse(p);
      const auto r = testing::run(src, o);
      if (!first) {
        first = r;
        continue;
      }
      CHECK_MESSAGE(r.out == first->out, file.filename().string() << " " << p);
      CHECK(r.exit_code == first->exit_code);
    }
  }
}
