#include <stdexcept>
#include <string>

#include "minigolo/bytecode/code_image.hpp"

namespace minigolo::bytecode {

std::int32_t stack_effect(const CodeImage& image, const Instruction& ins) {
  switch (ins.op) {
    case Opcode::LoadConst:
    case Opcode::LoadLocal:
    case Opcode::Dup: return 1;
    case Opcode::StoreLocal:
    case Opcode::Pop:
    case Opcode::JumpIfFalse:
    case Opcode::Return: return -1;
    case Opcode::Jump:
    case Opcode::ReturnNull: return 0;
    case Opcode::CallFunction: return 1 - ins.b;
    case Opcode::CallMethod: return -ins.b;
    case Opcode::CallOperator:
      return image.sites[ins.a].kind == SiteInfo::Kind::UnaryOperator ? 0 : -1;
    case Opcode::CallClosure: return -ins.a;
    case Opcode::MakeClosure: return 1 - ins.b;
    case Opcode::MakeTuple:
    case Opcode::MakeList: return 1 - ins.a;
  }
  return 0;
}

namespace {

std::int32_t consumed(const CodeImage& image, const Instruction& ins) {
  switch (ins.op) {
    case Opcode::StoreLocal:
    case Opcode::Pop:
    case Opcode::JumpIfFalse:
    case Opcode::Return:
    case Opcode::Dup: return 1;
    case Opcode::CallFunction: return ins.b;
    case Opcode::CallMethod: return ins.b + 1;
    case Opcode::CallOperator:
      return image.sites[ins.a].kind == SiteInfo::Kind::UnaryOperator ? 1 : 2;
    case Opcode::CallClosure: return ins.a + 1;
    case Opcode::MakeClosure: return ins.b;
    case Opcode::MakeTuple:
    case Opcode::MakeList: return ins.a;
    default: return 0;
  }
}

}  // namespace

std::vector<std::int32_t> verify_stack(const CodeImage& image, const CompiledFunction& fn) {
  const auto size = static_cast<std::int32_t>(fn.code.size());
  std::vector<std::int32_t> depth(fn.code.size(), -1);
  std::vector<std::int32_t> work;
  auto reach = [&](std::int32_t target, std::int32_t d, std::int32_t from) {
    if (target < 0 || target >= size) {
      throw std::logic_error(fn.name + ": jump out of range at " + std::to_string(from));
    }
    if (depth[target] < 0) {
      depth[target] = d;
      work.push_back(target);
    } else if (depth[target] != d) {
      throw std::logic_error(fn.name + ": inconsistent stack depth at " + std::to_string(target));
    }
  };
  if (size > 0) reach(0, 0, 0);
  while (!work.empty()) {
    const auto i = work.back();
    work.pop_back();
    const Instruction& ins = fn.code[i];
    const auto d = depth[i];
    if (d < consumed(image, ins)) {
      throw std::logic_error(fn.name + ": stack underflow at " + std::to_string(i));
    }
    const auto after = d + stack_effect(image, ins);
    switch (ins.op) {
      case Opcode::Return:
        if (d != 1) throw std::logic_error(fn.name + ": RETURN at depth " + std::to_string(d));
        break;
      case Opcode::ReturnNull: break;
      case Opcode::Jump: reach(ins.a, after, i); break;
      case Opcode::JumpIfFalse:
        reach(ins.a, after, i);
        reach(i + 1, after, i);
        break;
      default:
        if (i + 1 >= size) throw std::logic_error(fn.name + ": falls off the end");
        reach(i + 1, after, i);
    }
  }
  return depth;
}

}  // namespace minigolo::bytecode
