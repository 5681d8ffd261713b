#include <sstream>

#include "minigolo/bytecode/code_image.hpp"
#include "minigolo/runtime/render.hpp"

namespace minigolo::bytecode {

namespace {

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string describe_constant(const Value& v) {
  switch (v.kind()) {
    case Kind::Str: return "Str " + quote(v.as_str());
    case Kind::FunctionRef: return "Function " + v.as_function().name;
    case Kind::Null: return "Null";
    default: return std::string(kind_name(v.kind())) + " " + render(v);
  }
}

}  // namespace

std::string_view to_string(Opcode op) {
  switch (op) {
    case Opcode::LoadConst: return "LOAD_CONST";
    case Opcode::LoadLocal: return "LOAD_LOCAL";
    case Opcode::StoreLocal: return "STORE_LOCAL";
    case Opcode::Pop: return "POP";
    case Opcode::Dup: return "DUP";
    case Opcode::Jump: return "JUMP";
    case Opcode::JumpIfFalse: return "JUMP_IF_FALSE";
    case Opcode::Return: return "RETURN";
    case Opcode::ReturnNull: return "RETURN_NULL";
    case Opcode::CallFunction: return "CALL_FUNCTION";
    case Opcode::CallMethod: return "CALL_METHOD";
    case Opcode::CallOperator: return "CALL_OPERATOR";
    case Opcode::CallClosure: return "CALL_CLOSURE";
    case Opcode::MakeClosure: return "MAKE_CLOSURE";
    case Opcode::MakeTuple: return "MAKE_TUPLE";
    case Opcode::MakeList: return "MAKE_LIST";
  }
  return "?";
}

std::string disassemble(const CodeImage& image) {
  std::ostringstream out;
  for (const auto& fn : image.functions) {
    out << "== " << fn.name << '/' << fn.params << " locals=" << fn.local_slots << '\n';
    for (std::size_t i = 0; i < fn.code.size(); ++i) {
      const Instruction& ins = fn.code[i];
      out << i << ": " << to_string(ins.op);
      switch (ins.op) {
        case Opcode::LoadConst:
          out << " k=" << ins.a << ' ' << describe_constant(image.constants[ins.a]);
          break;
        case Opcode::LoadLocal:
        case Opcode::StoreLocal: out << " slot=" << ins.a; break;
        case Opcode::Jump:
        case Opcode::JumpIfFalse: out << " target=" << ins.a; break;
        case Opcode::CallFunction:
        case Opcode::CallMethod:
          out << " site=" << ins.a << " name=" << image.sites[ins.a].name << " argc=" << ins.b;
          break;
        case Opcode::CallOperator:
          out << " site=" << ins.a << " op=" << image.sites[ins.a].name;
          break;
        case Opcode::CallClosure: out << " argc=" << ins.a; break;
        case Opcode::MakeClosure:
          out << " fn=" << ins.a << " capc=" << ins.b;
          break;
        case Opcode::MakeTuple:
        case Opcode::MakeList: out << " n=" << ins.a; break;
        default: break;
      }
      out << '\n';
    }
  }
  return out.str();
}

std::uint64_t checksum(const CodeImage& image) {
  // FNV-1a over (function, opcode, operands).
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (std::size_t f = 0; f < image.functions.size(); ++f) {
    mix(f);
    for (const auto& ins : image.functions[f].code) {
      mix(static_cast<std::uint64_t>(ins.op));
      mix(static_cast<std::uint32_t>(ins.a));
      mix(static_cast<std::uint32_t>(ins.b));
    }
  }
  return h;
}

}  // namespace minigolo::bytecode
