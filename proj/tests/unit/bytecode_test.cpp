#include <doctest.h>

#include <set>

#include "minigolo/bytecode/code_image.hpp"
#include "minigolo/pipeline.hpp"
#include "minigolo/support/errors.hpp"
#include "minigolo/vm/vm.hpp"
#include "test_support.hpp"

using namespace minigolo;
using bytecode::Opcode;

namespace {

bytecode::CodeImage image_of(std::string_view src) { return bytecode::compile(compile_source(src).lifted); }

const bytecode::CompiledFunction& fn_named(const bytecode::CodeImage& image, std::string_view name) {
  for (const auto& f : image.functions) {
    if (f.name == name) return f;
  }
  throw std::runtime_error("missing function");
}

bool is_call(Opcode op) {
  return op == Opcode::CallFunction || op == Opcode::CallMethod || op == Opcode::CallOperator;
}

const char* kFib = R"(module m
function fib = |n| {
  if n <= 1 {
    return n
  }
  return fib(n - 1) + fib(n - 2)
}
function main = || -> fib(10))";

}  // namespace

TEST_CASE("10 + 10_L compiles to two constants and one operator site") {
  const auto image = image_of("module m function f = || -> 10 + 10_L");
  const auto& code = fn_named(image, "f").code;
  REQUIRE(code.size() >= 3);
  CHECK(code[0].op == Opcode::LoadConst);
  CHECK(image.constants[code[0].a].kind() == Kind::Int);
  CHECK(code[1].op == Opcode::LoadConst);
  CHECK(image.constants[code[1].a].kind() == Kind::Long);
  CHECK(code[2] == bytecode::Instruction{Opcode::CallOperator, 0, 0});
  CHECK(image.sites[0].name == "plus");
  const std::string dis = bytecode::disassemble(image);
  CHECK(dis.find("0: LOAD_CONST k=0 Int 10\n1: LOAD_CONST k=1 Long 10\n2: CALL_OPERATOR site=0 op=plus\n") !=
        std::string::npos);
}

TEST_CASE("return n is LOAD_LOCAL 0; RETURN") {
  const auto image = image_of("module m function f = |n| { return n }");
  const auto& code = fn_named(image, "f").code;
  CHECK(code[0] == bytecode::Instruction{Opcode::LoadLocal, 0, 0});
  CHECK(code[1].op == Opcode::Return);
}

TEST_CASE("empty function disassembles to a single RETURN_NULL") {
  const std::string dis = bytecode::disassemble(image_of("module m function f = || { }"));
  CHECK(dis == "== f/0 locals=0\n0: RETURN_NULL\n");
}

TEST_CASE("each operator occurrence gets its own site") {
  const auto image = image_of(kFib);
  std::set<std::int32_t> plus_sites;
  for (const auto& ins : fn_named(image, "fib").code) {
    if (ins.op == Opcode::CallOperator && image.sites[ins.a].name == "minus") plus_sites.insert(ins.a);
  }
  CHECK(plus_sites.size() == 2);
  const std::string dis = bytecode::disassemble(image);
  std::size_t calls = 0;
  for (auto at = dis.find("CALL_FUNCTION"); at != std::string::npos; at = dis.find("CALL_FUNCTION", at + 1)) {
    if (dis.compare(dis.find("name=", at), 8, "name=fib") == 0) ++calls;
  }
  CHECK(calls == 3);  // two in fib, one in main
}

TEST_CASE("constant pool deduplicates equal constants") {
  const auto image = image_of("module m function f = || -> 1 + 1 + 1_L + 1_L + \"a\" + \"a\" + 1.0");
  CHECK(image.constants.size() == 4);
}

TEST_CASE("conditions compile to JUMP_IF_FALSE, logic to jumps") {
  const auto image = image_of("module m function f = |a, b| { if a and b { return 1 } while a { } }");
  std::size_t jif = 0, ops = 0;
  for (const auto& ins : fn_named(image, "f").code) {
    jif += ins.op == Opcode::JumpIfFalse;
    ops += ins.op == Opcode::CallOperator;
  }
  CHECK(jif >= 3);
  CHECK(ops == 0);
}

TEST_CASE("instruction limit raises CompileError") {
  const auto c = compile_source("module m function f = || -> 1 + 2 + 3 + 4");
  CHECK_THROWS_AS(bytecode::compile_with_limit(c.lifted, 4), CompileError);
  CHECK_NOTHROW(bytecode::compile_with_limit(c.lifted, 100));
}

TEST_CASE("disassembly is stable") {
  const std::string src = testing::read_file(testing::corpus_dir() / "ok/03_fibonacci.golo");
  CHECK(bytecode::disassemble(image_of(src)) == bytecode::disassemble(image_of(src)));
}

TEST_CASE("corpus: stack discipline, site density and jump targets") {
  for (const auto& file : testing::corpus_files("ok")) {
    const auto image = image_of(testing::read_file(file));
    std::set<std::int32_t> sites;
    for (const auto& fn : image.functions) {
      std::vector<std::int32_t> depth;
      REQUIRE_NOTHROW_MESSAGE(depth = bytecode::verify_stack(image, fn), file.filename().string());
      for (std::size_t i = 0; i < fn.code.size(); ++i) {
        const auto& ins = fn.code[i];
        if (ins.op == Opcode::Return && depth[i] >= 0) CHECK(depth[i] == 1);
        if (ins.op == Opcode::Jump || ins.op == Opcode::JumpIfFalse) {
          CHECK(ins.a >= 0);
          CHECK(ins.a < static_cast<std::int32_t>(fn.code.size()));
        }
        if (is_call(ins.op)) CHECK(sites.insert(ins.a).second);
      }
    }
    CHECK(sites.size() == image.call_site_count());
    if (!sites.empty()) {
      CHECK(*sites.begin() == 0);
      CHECK(*sites.rbegin() == static_cast<std::int32_t>(image.call_site_count()) - 1);
    }
  }
}

TEST_CASE("verifier rejects inconsistent code") {
  auto image = image_of("module m function f = || -> 1");
  auto fn = image.functions[0];
  fn.code = {{Opcode::Pop}, {Opcode::ReturnNull}};
  CHECK_THROWS_AS(bytecode::verify_stack(image, fn), std::logic_error);
  fn.code = {{Opcode::Jump, 7}};
  CHECK_THROWS_AS(bytecode::verify_stack(image, fn), std::logic_error);
  fn.code = {{Opcode::LoadConst, 0}, {Opcode::LoadConst, 0}, {Opcode::Return}};
  CHECK_THROWS_AS(bytecode::verify_stack(image, fn), std::logic_error);
}

TEST_CASE("bytecode stays unchanged by execution") {
  for (const char* name : {"03_fibonacci", "08_operator_matrix", "24_shapes_dispatch", "37_polymorphic_site"}) {
    const auto image = image_of(testing::read_file(testing::corpus_dir() / "ok" / (std::string(name) + ".golo")));
    const auto before = bytecode::checksum(image);
    std::ostringstream out;
    vm::execute(image, {}, {}, out);
    CHECK(bytecode::checksum(image) == before);
  }
}
