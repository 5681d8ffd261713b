#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "minigolo/ir/ir.hpp"
#include "minigolo/runtime/program.hpp"
#include "minigolo/runtime/value.hpp"
#include "minigolo/support/operator_kind.hpp"

namespace minigolo::bytecode {

enum class Opcode : std::uint8_t {
  LoadConst,     // a = constant index
  LoadLocal,     // a = slot
  StoreLocal,    // a = slot
  Pop,
  Dup,
  Jump,          // a = target
  JumpIfFalse,   // a = target
  Return,
  ReturnNull,
  CallFunction,  // a = site, b = argc
  CallMethod,    // a = site, b = argc (receiver excluded)
  CallOperator,  // a = site
  CallClosure,   // a = argc; callee sits below the arguments
  MakeClosure,   // a = function index, b = capture count
  MakeTuple,     // a = element count
  MakeList,      // a = element count
};

std::string_view to_string(Opcode op);

struct Instruction {
  Opcode op;
  std::int32_t a = 0;
  std::int32_t b = 0;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct SiteInfo {
  enum class Kind : std::uint8_t { BinaryOperator, UnaryOperator, Function, Method };
  Kind kind;
  std::string name;  // function or method name, operator name for operators
  std::uint32_t argc = 0;  // receiver excluded
  BinaryOp binary_op = BinaryOp::Plus;
  UnaryOp unary_op = UnaryOp::Neg;
};

struct CompiledFunction {
  std::string name;  // display name
  std::uint32_t params = 0;
  std::uint32_t local_slots = 0;
  std::uint32_t capture_count = 0;
  bool synthetic = false;
  /// Deepest operand stack the code can reach.
  std::uint32_t max_stack = 0;
  std::vector<Instruction> code;
  /// Source position of each instruction, for diagnostics.
  std::vector<SourcePos> positions;
};

/// A compiled program. Immutable once built.
struct CodeImage {
  std::vector<Value> constants;
  std::vector<CompiledFunction> functions;
  std::vector<SiteInfo> sites;
  std::int32_t entry = -1;  // index of `main`, or -1
  ProgramInfo program;

  std::size_t call_site_count() const { return sites.size(); }
};

/// Compiles a checked, lifted, slot-allocated module.
/// Throws CompileError when a function exceeds the jump offset range.
CodeImage compile(const ir::Module& module);

/// compile() with a custom per-function instruction limit.
CodeImage compile_with_limit(const ir::Module& module, std::size_t limit);

/// `== <name>/<argc> locals=<n>` headers followed by `<idx>: <OPCODE> <operands>` lines.
std::string disassemble(const CodeImage& image);

/// Operand stack depth before each instruction, found by abstract
/// interpretation. Throws std::logic_error when two paths disagree, the stack
/// underflows, a jump leaves the function or RETURN sees a depth other than 1.
std::vector<std::int32_t> verify_stack(const CodeImage& image, const CompiledFunction& fn);

/// Stack delta of one instruction.
std::int32_t stack_effect(const CodeImage& image, const Instruction& ins);

/// Order-sensitive hash over every instruction array.
std::uint64_t checksum(const CodeImage& image);

/// Maximum instruction count per function.
inline constexpr std::size_t kMaxInstructions = 0x7fffffff;

}  // namespace minigolo::bytecode
