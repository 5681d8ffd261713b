#include <algorithm>
#include <stdexcept>

#include "minigolo/bytecode/code_image.hpp"
#include "minigolo/runtime/literal.hpp"
#include "minigolo/support/errors.hpp"

namespace minigolo::bytecode {

namespace {

using ir::Node;
using ir::NodeKind;

class FunctionCompiler {
 public:
  FunctionCompiler(CodeImage& image, const ir::Module& module, std::size_t limit)
      : image_(image), module_(module), limit_(limit) {}

  CompiledFunction compile(const ir::Function& fn) {
    out_ = {};
    out_.name = fn.display_name();
    out_.params = static_cast<std::uint32_t>(fn.params.size());
    out_.local_slots = fn.local_slots;
    out_.capture_count = fn.capture_count;
    out_.synthetic = fn.synthetic;
    statement(fn.body);
    emit(Opcode::ReturnNull, fn.body.pos);
    return std::move(out_);
  }

 private:
  std::size_t emit(Opcode op, SourcePos pos, std::int32_t a = 0, std::int32_t b = 0) {
    if (out_.code.size() >= limit_) {
      throw CompileError(pos, "function " + out_.name + " exceeds the jump offset range");
    }
    out_.code.push_back({op, a, b});
    out_.positions.push_back(pos);
    return out_.code.size() - 1;
  }

  std::int32_t here() const { return static_cast<std::int32_t>(out_.code.size()); }
  void patch(std::size_t at, std::int32_t target) { out_.code[at].a = target; }

  std::int32_t constant(Value v) {
    for (std::size_t i = 0; i < image_.constants.size(); ++i) {
      if (same_constant(image_.constants[i], v)) return static_cast<std::int32_t>(i);
    }
    image_.constants.push_back(std::move(v));
    return static_cast<std::int32_t>(image_.constants.size() - 1);
  }

  std::int32_t site(SiteInfo info) {
    image_.sites.push_back(std::move(info));
    return static_cast<std::int32_t>(image_.sites.size() - 1);
  }

  void statement(const Node& n) {
    switch (n.kind) {
      case NodeKind::Block:
        for (const auto& c : n.children) statement(c);
        return;
      case NodeKind::Let:
      case NodeKind::Var:
      case NodeKind::Assign:
        expression(n.children[0]);
        emit(Opcode::StoreLocal, n.pos, n.slot);
        return;
      case NodeKind::If: {
        expression(n.children[0]);
        const auto to_else = emit(Opcode::JumpIfFalse, n.pos);
        statement(n.children[1]);
        if (n.children.size() > 2) {
          const auto to_end = emit(Opcode::Jump, n.pos);
          patch(to_else, here());
          statement(n.children[2]);
          patch(to_end, here());
        } else {
          patch(to_else, here());
        }
        return;
      }
      case NodeKind::While: {
        const auto top = here();
        expression(n.children[0]);
        const auto to_end = emit(Opcode::JumpIfFalse, n.pos);
        statement(n.children[1]);
        emit(Opcode::Jump, n.pos, top);
        patch(to_end, here());
        return;
      }
      case NodeKind::Return:
        if (n.children.empty()) {
          emit(Opcode::ReturnNull, n.pos);
        } else {
          expression(n.children[0]);
          emit(Opcode::Return, n.pos);
        }
        return;
      case NodeKind::ExprStmt:
        expression(n.children[0]);
        emit(Opcode::Pop, n.pos);
        return;
      default:
        throw std::logic_error("not a statement: " + std::string(ir::to_string(n.kind)));
    }
  }

  // `a and b` / `a or b`: both operands go through the branch refinement.
  void logical(const Node& n) {
    const bool is_and = n.binary_op == BinaryOp::And;
    expression(n.children[0]);
    const auto lhs_false = emit(Opcode::JumpIfFalse, n.pos);
    std::size_t lhs_true_exit = 0;
    if (!is_and) {
      emit(Opcode::LoadConst, n.pos, constant(Value::boolean(true)));
      lhs_true_exit = emit(Opcode::Jump, n.pos);
      patch(lhs_false, here());
    }
    expression(n.children[1]);
    const auto rhs_false = emit(Opcode::JumpIfFalse, n.pos);
    emit(Opcode::LoadConst, n.pos, constant(Value::boolean(true)));
    const auto true_exit = emit(Opcode::Jump, n.pos);
    patch(rhs_false, here());
    if (is_and) patch(lhs_false, here());
    emit(Opcode::LoadConst, n.pos, constant(Value::boolean(false)));
    patch(true_exit, here());
    if (!is_and) patch(lhs_true_exit, here());
  }

  void expression(const Node& n) {
    switch (n.kind) {
      case NodeKind::Const:
        emit(Opcode::LoadConst, n.pos, constant(literal_value(n.literal)));
        return;
      case NodeKind::Ref:
        if (n.binding == ir::Binding::Local) {
          emit(Opcode::LoadLocal, n.pos, n.slot);
        } else {
          emit(Opcode::LoadConst, n.pos, constant(function_value(n)));
        }
        return;
      case NodeKind::Binary:
        if (is_logical(n.binary_op)) {
          logical(n);
          return;
        }
        expression(n.children[0]);
        expression(n.children[1]);
        emit(Opcode::CallOperator, n.pos,
             site({SiteInfo::Kind::BinaryOperator, std::string(operator_name(n.binary_op)), 2,
                   n.binary_op, UnaryOp::Neg}));
        return;
      case NodeKind::Unary:
        expression(n.children[0]);
        emit(Opcode::CallOperator, n.pos,
             site({SiteInfo::Kind::UnaryOperator, std::string(operator_name(n.unary_op)), 1,
                   BinaryOp::Plus, n.unary_op}));
        return;
      case NodeKind::Call: {
        const auto argc = static_cast<std::int32_t>(n.children.size());
        if (n.binding == ir::Binding::Local) {
          emit(Opcode::LoadLocal, n.pos, n.slot);
          for (const auto& c : n.children) expression(c);
          emit(Opcode::CallClosure, n.pos, argc);
          return;
        }
        for (const auto& c : n.children) expression(c);
        emit(Opcode::CallFunction, n.pos,
             site({SiteInfo::Kind::Function, n.name, static_cast<std::uint32_t>(argc)}), argc);
        return;
      }
      case NodeKind::MethodCall: {
        for (const auto& c : n.children) expression(c);
        const auto argc = static_cast<std::int32_t>(n.arg_count());
        emit(Opcode::CallMethod, n.pos,
             site({SiteInfo::Kind::Method, n.name, static_cast<std::uint32_t>(argc)}), argc);
        return;
      }
      case NodeKind::MakeClosure:
        for (const auto& c : n.children) expression(c);
        emit(Opcode::MakeClosure, n.pos, n.function_index, static_cast<std::int32_t>(n.children.size()));
        return;
      case NodeKind::TupleLit:
      case NodeKind::ListLit:
        for (const auto& c : n.children) expression(c);
        emit(n.kind == NodeKind::TupleLit ? Opcode::MakeTuple : Opcode::MakeList, n.pos,
             static_cast<std::int32_t>(n.children.size()));
        return;
      case NodeKind::Lambda:
        throw std::logic_error("compile requires lifted closures");
      default:
        throw std::logic_error("not an expression: " + std::string(ir::to_string(n.kind)));
    }
  }

  Value function_value(const Node& n) const {
    for (std::size_t i = 0; i < module_.functions.size(); ++i) {
      const auto& f = module_.functions[i];
      if (f.name == n.name && f.augment_target.empty() && !f.synthetic) {
        return Value::function(static_cast<std::uint32_t>(i), f.name);
      }
    }
    throw std::logic_error("unresolved global reference: " + n.name);
  }

  CodeImage& image_;
  const ir::Module& module_;
  std::size_t limit_;
  CompiledFunction out_;
};

}  // namespace

CodeImage compile(const ir::Module& module) { return compile_with_limit(module, kMaxInstructions); }

CodeImage compile_with_limit(const ir::Module& module, std::size_t limit) {
  CodeImage image;
  image.program = ProgramInfo::from_ir(module);
  FunctionCompiler compiler(image, module, limit);
  for (const auto& fn : module.functions) image.functions.push_back(compiler.compile(fn));
  for (auto& fn : image.functions) {
    const auto depths = verify_stack(image, fn);
    std::int32_t deepest = 0;
    for (std::size_t i = 0; i < depths.size(); ++i) {
      if (depths[i] < 0) continue;
      deepest = std::max({deepest, depths[i], depths[i] + stack_effect(image, fn.code[i])});
    }
    fn.max_stack = static_cast<std::uint32_t>(deepest);
  }
  for (std::size_t i = 0; i < module.functions.size(); ++i) {
    const auto& f = module.functions[i];
    if (f.name == "main" && f.augment_target.empty() && !f.synthetic) {
      image.entry = static_cast<std::int32_t>(i);
    }
  }
  return image;
}

}  // namespace minigolo::bytecode
