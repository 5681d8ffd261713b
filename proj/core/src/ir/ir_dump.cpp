#include <charconv>

#include "minigolo/ir/passes.hpp"
#include "minigolo/runtime/render.hpp"

namespace minigolo {

namespace {

using ir::Node;
using ir::NodeKind;

std::string literal_text(const ast::Literal& lit) {
  switch (lit.kind) {
    case ast::LiteralKind::Int: return "Int " + std::to_string(lit.integer);
    case ast::LiteralKind::Long: return "Long " + std::to_string(lit.integer);
    case ast::LiteralKind::Double: return "Double " + render_double(lit.real);
    case ast::LiteralKind::Str: {
      std::string out = "Str \"";
      for (char c : lit.text) {
        if (c == '\n') out += "\\n";
        else if (c == '"') out += "\\\"";
        else if (c == '\\') out += "\\\\";
        else out += c;
      }
      return out + "\"";
    }
    case ast::LiteralKind::Bool: return lit.boolean ? "Bool true" : "Bool false";
    case ast::LiteralKind::Null: return "Null";
  }
  return "?";
}

std::string binding_text(const Node& n) {
  switch (n.binding) {
    case ir::Binding::Local: return " local slot=" + std::to_string(n.slot);
    case ir::Binding::Global: return " global";
    case ir::Binding::Unresolved: return "";
  }
  return "";
}

class IrDumper {
 public:
  std::string take() { return std::move(out_); }

  void module(const ir::Module& m) {
    line(0, "Module " + m.name);
    for (const auto& imp : m.imports) line(1, "Import " + imp.name);
    for (const auto& s : m.structures) {
      std::string text = "Struct " + s.name;
      for (const auto& f : s.fields) text += " " + f;
      line(1, text);
    }
    for (const auto& a : m.augmentations) {
      std::string text = "Augment " + a.target;
      for (auto index : a.functions) text += " " + m.functions[index].name + "=#" + std::to_string(index);
      line(1, text);
    }
    for (std::size_t i = 0; i < m.functions.size(); ++i) function(i, m.functions[i]);
  }

 private:
  void line(int depth, const std::string& text) {
    out_.append(static_cast<std::size_t>(depth) * 2, ' ');
    out_ += text;
    out_ += '\n';
  }

  void function(std::size_t index, const ir::Function& f) {
    std::string text = "Function #" + std::to_string(index) + " " + f.display_name();
    if (f.local) text += " local";
    if (f.synthetic) text += " synthetic";
    text += " params=(";
    for (std::size_t i = 0; i < f.params.size(); ++i) {
      if (i > 0) text += ", ";
      text += f.params[i];
    }
    text += ") captures=" + std::to_string(f.capture_count);
    text += " locals=" + std::to_string(f.local_slots);
    line(1, text);
    node(f.body, 2);
  }

  void node(const Node& n, int depth) {
    std::string text(ir::to_string(n.kind));
    switch (n.kind) {
      case NodeKind::Const: text += " " + literal_text(n.literal); break;
      case NodeKind::Ref: text += " " + n.name + binding_text(n); break;
      case NodeKind::Binary: text += " " + std::string(symbol(n.binary_op)); break;
      case NodeKind::Unary: text += " " + std::string(symbol(n.unary_op)); break;
      case NodeKind::Call:
        text += " " + n.name + binding_text(n) + " argc=" + std::to_string(n.arg_count());
        break;
      case NodeKind::MethodCall:
        text += " " + n.name + " argc=" + std::to_string(n.arg_count());
        break;
      case NodeKind::Lambda:
        text += " (";
        for (std::size_t i = 0; i < n.params.size(); ++i) {
          if (i > 0) text += ", ";
          text += n.params[i];
        }
        text += ")";
        break;
      case NodeKind::MakeClosure:
        text += " " + n.name + " fn=" + std::to_string(n.function_index) +
                " captures=" + std::to_string(n.children.size());
        break;
      case NodeKind::Let:
      case NodeKind::Var:
      case NodeKind::Assign:
        text += " " + n.name;
        if (n.slot >= 0) text += " slot=" + std::to_string(n.slot);
        break;
      default: break;
    }
    line(depth, text);
    for (const auto& c : n.children) node(c, depth + 1);
  }

  std::string out_;
};

}  // namespace

std::string render_ir(const ir::Module& module) {
  IrDumper d;
  d.module(module);
  return d.take();
}

}  // namespace minigolo
