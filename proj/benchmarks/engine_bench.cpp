#include <benchmark/benchmark.h>

#include <memory>
#include <sstream>

#include "driver/bench.hpp"
#include "minigolo/ast_engine/engine.hpp"
#include "minigolo/bytecode/code_image.hpp"
#include "minigolo/pipeline.hpp"
#include "minigolo/runtime/operators.hpp"
#include "minigolo/vm/vm.hpp"

using namespace minigolo;

namespace {

std::vector<Value> gcd_args(int pairs) {
  std::vector<Value> xs, ys;
  for (auto [a, b] : tools::gcd_pairs(pairs)) {
    xs.push_back(Value::integer(a));
    ys.push_back(Value::integer(b));
  }
  return {Value::list(std::move(xs)), Value::list(std::move(ys))};
}

void run_vm(benchmark::State& state, tools::Suite suite, DispatchPolicy policy, std::vector<Value> args) {
  const auto compiled = compile_source(tools::suite_source(suite));
  const auto image = bytecode::compile(compiled.lifted);
  std::ostringstream sink;
  vm::Vm machine(image, {policy}, sink);
  for (auto _ : state) benchmark::DoNotOptimize(machine.run_main(args));
}

void run_ast(benchmark::State& state, tools::Suite suite, bool specialize, std::vector<Value> args) {
  const auto compiled = compile_source(tools::suite_source(suite));
  auto tree = ast_engine::build_exec_tree(compiled.checked, {specialize, 3});
  std::ostringstream sink;
  ast_engine::AstEngine engine(*tree, {}, sink);
  for (auto _ : state) benchmark::DoNotOptimize(engine.run_main(args));
}

void BM_GcdVm(benchmark::State& state, DispatchPolicy policy) {
  run_vm(state, tools::Suite::Gcd, policy, gcd_args(static_cast<int>(state.range(0))));
}
void BM_GcdAst(benchmark::State& state, bool specialize) {
  run_ast(state, tools::Suite::Gcd, specialize, gcd_args(static_cast<int>(state.range(0))));
}
void BM_FibVm(benchmark::State& state, DispatchPolicy policy) {
  run_vm(state, tools::Suite::Fib, policy, {Value::integer(static_cast<int>(state.range(0)))});
}
void BM_FibAst(benchmark::State& state, bool specialize) {
  run_ast(state, tools::Suite::Fib, specialize, {Value::integer(static_cast<int>(state.range(0)))});
}
void BM_FmrVm(benchmark::State& state, DispatchPolicy policy) {
  run_vm(state, tools::Suite::Fmr, policy, {Value::integer(static_cast<int>(state.range(0)))});
}
void BM_FmrAst(benchmark::State& state, bool specialize) {
  run_ast(state, tools::Suite::Fmr, specialize, {Value::integer(static_cast<int>(state.range(0)))});
}

// The generic operator path every cache miss ends up in.
void BM_ApplyOperator(benchmark::State& state) {
  const Value a = Value::integer(1071), b = Value::real(462.5);
  for (auto _ : state) benchmark::DoNotOptimize(apply_operator(BinaryOp::Plus, a, b));
}

}  // namespace

BENCHMARK_CAPTURE(BM_GcdVm, mono, DispatchPolicy::mono())->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GcdVm, poly2, DispatchPolicy::poly(2))->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GcdVm, none, DispatchPolicy::none())->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GcdAst, specialized, true)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GcdAst, generic, false)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(BM_FibVm, mono, DispatchPolicy::mono())->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FibVm, none, DispatchPolicy::none())->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FibAst, specialized, true)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FibAst, generic, false)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(BM_FmrVm, mono, DispatchPolicy::mono())->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FmrAst, specialized, true)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK(BM_ApplyOperator);

BENCHMARK_MAIN();
