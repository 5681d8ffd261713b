#include "driver/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "driver/bench.hpp"
#include "driver/run.hpp"

namespace minigolo::tools {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_table(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << std::left << std::setw(6) << "suite" << std::setw(10) << "engine" << std::setw(13) << "policy"
      << std::right << std::setw(14) << "median_ms" << std::setw(12) << "p10_ms" << std::setw(12) << "p90_ms"
      << "  param\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& r : rows) {
    out << std::left << std::setw(6) << r.suite << std::setw(10) << r.engine << std::setw(13) << r.policy
        << std::right << std::setw(14) << r.median_ns / 1e6 << std::setw(12) << r.p10_ns / 1e6 << std::setw(12)
        << r.p90_ns / 1e6 << "  " << r.param << '\n';
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"minigolo: a small dynamic language with two execution engines"};
  app.require_subcommand(1);

  std::string file;
  std::string engine_text = "bytecode";
  std::string policy_text = "mono";
  RunOptions run_options;
  auto* run = app.add_subcommand("run", "Compile and execute a program");
  run->add_option("file", file, "Source file")->required()->check(CLI::ExistingFile);
  run->add_option("args", run_options.program_args, "Arguments passed to main");
  run->add_option("--engine", engine_text, "bytecode or ast")->check(CLI::IsMember({"bytecode", "ast"}));
  run->add_option("--cache-policy", policy_text, "mono, poly:<k> or none");
  run->add_flag("--no-specialize", "Pin AST nodes to their generic state");
  run->add_option("--dispatch-depth", run_options.dispatch_depth, "AST dispatch cache depth")
      ->check(CLI::PositiveNumber);
  run->add_flag("--dump-dispatch-stats", run_options.dump_dispatch_stats, "Print call-site counters to stderr");
  run->add_flag("--dump-profile", run_options.dump_profile, "Print AST node counters to stderr");
  run->add_flag("--instrument-boxing", run_options.instrument_boxing, "Count boxed numeric values");

  std::string stage_text;
  auto* compile = app.add_subcommand("compile", "Print a pipeline stage");
  compile->add_option("file", file, "Source file")->required()->check(CLI::ExistingFile);
  compile->add_option("--emit", stage_text, "tokens, ast, ir or bytecode")
      ->required()
      ->check(CLI::IsMember({"tokens", "ast", "ir", "bytecode"}));

  BenchConfig bench_config;
  std::string suite_text = "all";
  std::string bench_engine = "all";
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Time the fib, gcd and fmr suites");
  bench->add_option("--suite", suite_text, "fib, gcd, fmr or all")
      ->check(CLI::IsMember({"fib", "gcd", "fmr", "all"}));
  bench->add_option("--engine", bench_engine, "bytecode, ast or all")
      ->check(CLI::IsMember({"bytecode", "ast", "all"}));
  bench->add_option("--warmup", bench_config.warmup, "Discarded runs")->check(CLI::NonNegativeNumber);
  bench->add_option("--runs", bench_config.runs, "Measured runs")->check(CLI::PositiveNumber);
  bench->add_option("--csv", csv_path, "Write rows as CSV");
  bench->add_option("--fib-n", bench_config.fib_n, "fib argument")->check(CLI::NonNegativeNumber);
  bench->add_option("--gcd-pairs", bench_config.gcd_pairs, "Number of gcd pairs")->check(CLI::PositiveNumber);
  bench->add_option("--fmr-n", bench_config.fmr_n, "fmr element count")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return exit_code::ok;
    }
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }

  try {
    if (*run) {
      run_options.engine = parse_engine(engine_text);
      run_options.policy = DispatchPolicy::parse(policy_text);
      run_options.specialize = run->count("--no-specialize") == 0;
      return run_program(read_file(file), file, run_options, out, err);
    }
    if (*compile) return emit(read_file(file), file, parse_stage(stage_text), out, err);

    if (suite_text != "all") bench_config.suites = {parse_suite(suite_text)};
    if (bench_engine != "all") bench_config.variants = default_variants({parse_engine(bench_engine)});
    const auto rows = run_bench(bench_config);
    print_table(rows, out);
    if (!csv_path.empty()) {
      std::ofstream csv(csv_path);
      write_csv(rows, csv);
      if (!csv) {
        err << "error: cannot write " << csv_path << '\n';
        return exit_code::runtime_error;
      }
    }
    return exit_code::ok;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::runtime_error;
  }
}

}  // namespace minigolo::tools
