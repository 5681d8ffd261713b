#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "driver/run.hpp"

namespace minigolo::tools {

enum class Suite { Fib, Gcd, Fmr };

Suite parse_suite(std::string_view text);
std::string_view to_string(Suite suite);

/// One engine configuration: a dispatch policy for the bytecode engine, or
/// `specialized` / `generic` for the AST engine.
struct Variant {
  Engine engine;
  std::string policy;
};

/// Default bytecode policies (mono, poly:2, none) and AST modes for `engines`.
std::vector<Variant> default_variants(const std::vector<Engine>& engines);

struct BenchConfig {
  std::vector<Suite> suites{Suite::Fib, Suite::Gcd, Suite::Fmr};
  std::vector<Variant> variants = default_variants({Engine::Bytecode, Engine::Ast});
  int warmup = 3;
  int runs = 10;
  int fib_n = 25;
  int gcd_pairs = 1000;
  int fmr_n = 100000;
};

struct BenchRow {
  std::string suite;
  std::string engine;
  std::string policy;
  std::string param;
  int iterations = 0;
  double median_ns = 0;
  double p10_ns = 0;
  double p90_ns = 0;
};

/// Mini-language source of a suite. `main` receives the suite inputs as its
/// argument tuple and returns the result.
std::string_view suite_source(Suite suite);

/// Deterministic gcd inputs: mt19937 seeded with `seed`, values uniform in [1, 10^9].
std::vector<std::pair<std::int32_t, std::int32_t>> gcd_pairs(int count, std::uint32_t seed = 42);

/// Linear-interpolated percentile of an ascending sample, q in [0, 1].
double percentile(const std::vector<double>& sorted, double q);

/// Runs every (suite, variant) pair. Each suite is checked against its oracle
/// before timing; a mismatch throws std::runtime_error. Rows are sorted by
/// (suite, engine, policy).
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace minigolo::tools
