#include "driver/run.hpp"

#include <stdexcept>

#include "minigolo/ast_engine/engine.hpp"
#include "minigolo/bytecode/code_image.hpp"
#include "minigolo/dispatch/call_site.hpp"
#include "minigolo/frontend/ast_dump.hpp"
#include "minigolo/frontend/lexer.hpp"
#include "minigolo/ir/passes.hpp"
#include "minigolo/pipeline.hpp"
#include "minigolo/support/big_stack.hpp"
#include "minigolo/support/errors.hpp"
#include "minigolo/vm/vm.hpp"

namespace minigolo::tools {

Engine parse_engine(std::string_view text) {
  if (text == "bytecode") return Engine::Bytecode;
  if (text == "ast") return Engine::Ast;
  throw std::invalid_argument("unknown engine: " + std::string(text));
}

std::string_view to_string(Engine engine) { return engine == Engine::Bytecode ? "bytecode" : "ast"; }

EmitStage parse_stage(std::string_view text) {
  if (text == "tokens") return EmitStage::Tokens;
  if (text == "ast") return EmitStage::Ast;
  if (text == "ir") return EmitStage::Ir;
  if (text == "bytecode") return EmitStage::Bytecode;
  throw std::invalid_argument("unknown stage: " + std::string(text));
}

namespace {

void dump_ast_dispatch(std::ostream& err, const ast_engine::ExecTree& tree) {
  for (const auto& ref : tree.nodes) {
    const auto* cache = ref.node->cache();
    if (!cache || ref.node->exec_count() == 0) continue;
    const auto pos = ref.node->pos();
    err << "node=" << tree.functions[ref.function]->name << ':' << pos.line << ':' << pos.column
        << " kind=" << ast_engine::to_string(ref.node->kind()) << " hits=" << cache->hits()
        << " misses=" << cache->misses() << " depth=" << cache->size()
        << " mega=" << (cache->megamorphic() ? "true" : "false") << '\n';
  }
}

void execute(const Compilation& compiled, const RunOptions& options, std::ostream& out,
             std::ostream& err) {
  std::vector<Value> args;
  for (const auto& a : options.program_args) args.push_back(Value::str(a));

  if (options.engine == Engine::Bytecode) {
    const auto image = bytecode::compile(compiled.lifted);
    boxing::count = 0;
    boxing::enabled = options.instrument_boxing;
    vm::Vm machine(image, {options.policy}, out);
    try {
      machine.run_main(args);
    } catch (...) {
      out.flush();
      if (options.dump_dispatch_stats) dump_site_stats(err, machine.sites());
      throw;
    }
    boxing::enabled = false;
    out.flush();
    if (options.dump_dispatch_stats) dump_site_stats(err, machine.sites());
  } else {
    auto tree = ast_engine::build_exec_tree(compiled.checked,
                                            {options.specialize, options.dispatch_depth});
    boxing::count = 0;
    boxing::enabled = options.instrument_boxing;
    ast_engine::AstEngine engine(*tree, {}, out);
    try {
      engine.run_main(args);
    } catch (...) {
      out.flush();
      if (options.dump_dispatch_stats) dump_ast_dispatch(err, *tree);
      if (options.dump_profile) err << ast_engine::dump_profile(*tree);
      throw;
    }
    boxing::enabled = false;
    out.flush();
    if (options.dump_dispatch_stats) dump_ast_dispatch(err, *tree);
    if (options.dump_profile) err << ast_engine::dump_profile(*tree);
  }
  if (options.instrument_boxing) err << "boxed-allocations: " << boxing::count << '\n';
}

}  // namespace

int run_program(std::string_view source, std::string_view file, const RunOptions& options,
                std::ostream& out, std::ostream& err) {
  Compilation compiled;
  try {
    compiled = compile_source(source);
  } catch (const SourceError& e) {
    err << format_source_error(e, file);
    return exit_code::compile_error;
  }
  try {
    run_with_stack(kEngineStackBytes, [&] { execute(compiled, options, out, err); });
  } catch (const RuntimeError& e) {
    err << e.report();
    return exit_code::runtime_error;
  } catch (const SourceError& e) {
    err << format_source_error(e, file);
    return exit_code::compile_error;
  }
  return exit_code::ok;
}

int emit(std::string_view source, std::string_view file, EmitStage stage, std::ostream& out,
         std::ostream& err) {
  try {
    if (stage == EmitStage::Tokens) {
      for (const auto& t : tokenize(source)) {
        out << to_string(t.pos) << ' ' << to_string(t.kind);
        if (t.kind != TokenKind::Eof) out << ' ' << t.lexeme;
        out << '\n';
      }
      return exit_code::ok;
    }
    const auto compiled = compile_source(source);
    switch (stage) {
      case EmitStage::Ast: out << render_ast(compiled.ast); break;
      case EmitStage::Ir: out << render_ir(compiled.lifted); break;
      case EmitStage::Bytecode: out << bytecode::disassemble(bytecode::compile(compiled.lifted)); break;
      case EmitStage::Tokens: break;
    }
  } catch (const SourceError& e) {
    err << format_source_error(e, file);
    return exit_code::compile_error;
  }
  return exit_code::ok;
}

}  // namespace minigolo::tools
