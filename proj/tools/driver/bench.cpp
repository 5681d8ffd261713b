#include "driver/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "minigolo/ast_engine/engine.hpp"
#include "minigolo/bytecode/code_image.hpp"
#include "minigolo/pipeline.hpp"
#include "minigolo/runtime/render.hpp"
#include "minigolo/support/big_stack.hpp"
#include "minigolo/vm/vm.hpp"

namespace minigolo::tools {

namespace {

constexpr std::string_view kFibSource = R"(module bench.Fib

function fib = |n| {
  if n <= 1 {
    return n
  }
  return fib(n - 1) + fib(n - 2)
}

function main = |args| {
  return fib(args: get(0))
}
)";

constexpr std::string_view kGcdSource = R"(module bench.Gcd

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

function main = |args| {
  let xs = args: get(0)
  let ys = args: get(1)
  var total = 0_L
  var i = 0
  let n = xs: size()
  while i < n {
    total = total + gcd(xs: get(i), ys: get(i))
    i = i + 1
  }
  return total
}
)";

constexpr std::string_view kFmrSource = R"(module bench.FilterMapReduce

function main = |args| {
  return range(0, args: get(0))
    : filter(|x| -> (x % 2) == 0)
    : map(|x| -> x: toLong() * x)
    : reduce(0_L, |acc, x| -> acc + x)
}
)";

/// Executes one compiled suite repeatedly on a single engine instance, so
/// caches warmed by earlier runs stay warm.
class Runner {
 public:
  virtual ~Runner() = default;
  virtual Value run(std::span<const Value> args) = 0;
};

class VmRunner final : public Runner {
 public:
  VmRunner(const Compilation& c, DispatchPolicy policy, std::ostream& out)
      : image_(bytecode::compile(c.lifted)), vm_(image_, {policy}, out) {}
  Value run(std::span<const Value> args) override { return vm_.run_main(args); }

 private:
  bytecode::CodeImage image_;
  vm::Vm vm_;
};

class AstRunner final : public Runner {
 public:
  AstRunner(const Compilation& c, bool specialize, std::ostream& out)
      : tree_(ast_engine::build_exec_tree(c.checked, {specialize, 3})), engine_(*tree_, {}, out) {}
  Value run(std::span<const Value> args) override { return engine_.run_main(args); }

 private:
  std::unique_ptr<ast_engine::ExecTree> tree_;
  ast_engine::AstEngine engine_;
};

std::unique_ptr<Runner> make_runner(const Compilation& c, const Variant& v, std::ostream& out) {
  if (v.engine == Engine::Bytecode) return std::make_unique<VmRunner>(c, DispatchPolicy::parse(v.policy), out);
  if (v.policy != "specialized" && v.policy != "generic") {
    throw std::invalid_argument("unknown ast mode: " + v.policy);
  }
  return std::make_unique<AstRunner>(c, v.policy == "specialized", out);
}

struct Workload {
  std::vector<Value> args;
  std::int64_t expected;
  std::string param;
};

std::int64_t fib_oracle(int n) {
  std::int64_t a = 0, b = 1;
  for (int i = 0; i < n; ++i) b = std::exchange(a, b) + b;
  return a;
}

std::int64_t fmr_oracle(int n) {
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < n; x += 2) sum += x * x;
  return sum;
}

Workload gcd_workload(const std::vector<std::pair<std::int32_t, std::int32_t>>& pairs) {
  std::vector<Value> xs, ys;
  std::int64_t expected = 0;
  for (auto [a, b] : pairs) {
    xs.push_back(Value::integer(a));
    ys.push_back(Value::integer(b));
    expected += std::gcd(a, b);
  }
  return {{Value::list(std::move(xs)), Value::list(std::move(ys))}, expected, ""};
}

Workload workload(Suite suite, const BenchConfig& config) {
  switch (suite) {
    case Suite::Fib:
      return {{Value::integer(config.fib_n)}, fib_oracle(config.fib_n), "n=" + std::to_string(config.fib_n)};
    case Suite::Gcd: {
      auto w = gcd_workload(gcd_pairs(config.gcd_pairs));
      w.param = "seed=42;pairs=" + std::to_string(config.gcd_pairs);
      return w;
    }
    case Suite::Fmr:
      return {{Value::integer(config.fmr_n)}, fmr_oracle(config.fmr_n), "n=" + std::to_string(config.fmr_n)};
  }
  throw std::logic_error("unknown suite");
}

/// Small fixed inputs with hand-checkable answers, run before the real workload.
Workload precheck(Suite suite) {
  switch (suite) {
    case Suite::Fib: return {{Value::integer(30)}, 832040, ""};
    case Suite::Gcd: return gcd_workload({{1071, 462}});
    case Suite::Fmr: return {{Value::integer(10)}, 120, ""};
  }
  throw std::logic_error("unknown suite");
}

std::int64_t integral(const Value& v) {
  if (v.is(Kind::Int)) return v.as_int();
  if (v.is(Kind::Long)) return v.as_long();
  return std::numeric_limits<std::int64_t>::min();
}

void verify(Suite suite, const Variant& v, const Value& got, std::int64_t expected) {
  if (integral(got) == expected) return;
  std::ostringstream msg;
  msg << to_string(suite) << " on " << to_string(v.engine) << '/' << v.policy << ": expected " << expected
      << ", got " << render(got);
  throw std::runtime_error(msg.str());
}

BenchRow measure(Suite suite, const Variant& v, const Compilation& compiled, const BenchConfig& config) {
  std::ostringstream sink;
  const Workload check = precheck(suite);
  verify(suite, v, make_runner(compiled, v, sink)->run(check.args), check.expected);

  const Workload w = workload(suite, config);
  auto runner = make_runner(compiled, v, sink);
  for (int i = 0; i < config.warmup; ++i) verify(suite, v, runner->run(w.args), w.expected);

  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(config.runs));
  for (int i = 0; i < config.runs; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Value result = runner->run(w.args);
    const auto stop = std::chrono::steady_clock::now();
    verify(suite, v, result, w.expected);
    samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  return {std::string(to_string(suite)), std::string(to_string(v.engine)), v.policy, w.param, config.runs,
          percentile(samples, 0.5), percentile(samples, 0.1), percentile(samples, 0.9)};
}

}  // namespace

Suite parse_suite(std::string_view text) {
  if (text == "fib") return Suite::Fib;
  if (text == "gcd") return Suite::Gcd;
  if (text == "fmr") return Suite::Fmr;
  throw std::invalid_argument("unknown suite: " + std::string(text));
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Fib: return "fib";
    case Suite::Gcd: return "gcd";
    case Suite::Fmr: return "fmr";
  }
  return "?";
}

std::vector<Variant> default_variants(const std::vector<Engine>& engines) {
  std::vector<Variant> out;
  for (Engine e : engines) {
    if (e == Engine::Bytecode) {
      for (const char* p : {"mono", "poly:2", "none"}) out.push_back({e, p});
    } else {
      for (const char* p : {"specialized", "generic"}) out.push_back({e, p});
    }
  }
  return out;
}

std::string_view suite_source(Suite suite) {
  switch (suite) {
    case Suite::Fib: return kFibSource;
    case Suite::Gcd: return kGcdSource;
    case Suite::Fmr: return kFmrSource;
  }
  return {};
}

std::vector<std::pair<std::int32_t, std::int32_t>> gcd_pairs(int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::int32_t> dist(1, 1'000'000'000);
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs;
  pairs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const auto a = dist(rng);
    pairs.emplace_back(a, dist(rng));
  }
  return pairs;
}

double percentile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0;
  const double rank = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (rank - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.warmup < 0) throw std::invalid_argument("warmup must be >= 0");
  if (config.runs < 1) throw std::invalid_argument("runs must be >= 1");
  std::vector<BenchRow> rows;
  run_with_stack(kEngineStackBytes, [&] {
    for (Suite suite : config.suites) {
      const Compilation compiled = compile_source(suite_source(suite));
      for (const auto& v : config.variants) rows.push_back(measure(suite, v, compiled, config));
    }
  });
  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.suite, a.engine, a.policy) < std::tie(b.suite, b.engine, b.policy);
  });
  return rows;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "suite,engine,policy,param,iterations,median_ns,p10_ns,p90_ns\n";
  out.setf(std::ios::fixed);
  out.precision(0);
  for (const auto& r : rows) {
    out << r.suite << ',' << r.engine << ',' << r.policy << ',' << r.param << ',' << r.iterations << ','
        << r.median_ns << ',' << r.p10_ns << ',' << r.p90_ns << '\n';
  }
}

}  // namespace minigolo::tools
