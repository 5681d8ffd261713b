#include <variant>

#include "minigolo/ir/passes.hpp"

namespace minigolo {

namespace {

using ir::Node;
using ir::NodeKind;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Node make(NodeKind kind, SourcePos pos) {
  Node n;
  n.kind = kind;
  n.pos = pos;
  return n;
}

Node lower_block(const ast::Block& block);
Node lower_stmt(const ast::Stmt& stmt);

Node lower_expr(const ast::Expr& e) {
  return std::visit(
      Overloaded{
          [&](const ast::Literal& lit) {
            Node n = make(NodeKind::Const, e.pos);
            n.literal = lit;
            return n;
          },
          [&](const ast::Reference& r) {
            Node n = make(NodeKind::Ref, e.pos);
            n.name = r.name;
            return n;
          },
          [&](const ast::Binary& b) {
            Node n = make(NodeKind::Binary, e.pos);
            n.binary_op = b.op;
            n.children.push_back(lower_expr(*b.lhs));
            n.children.push_back(lower_expr(*b.rhs));
            return n;
          },
          [&](const ast::Unary& u) {
            Node n = make(NodeKind::Unary, e.pos);
            n.unary_op = u.op;
            n.children.push_back(lower_expr(*u.operand));
            return n;
          },
          [&](const ast::Call& c) {
            Node n = make(NodeKind::Call, e.pos);
            n.name = c.name;
            for (const auto& a : c.args) n.children.push_back(lower_expr(*a));
            return n;
          },
          [&](const ast::MethodCall& c) {
            Node n = make(NodeKind::MethodCall, e.pos);
            n.name = c.name;
            n.children.push_back(lower_expr(*c.receiver));
            for (const auto& a : c.args) n.children.push_back(lower_expr(*a));
            return n;
          },
          [&](const ast::Lambda& l) {
            Node n = make(NodeKind::Lambda, e.pos);
            n.params = l.params;
            n.children.push_back(lower_block(l.body));
            return n;
          },
          [&](const ast::TupleLit& t) {
            Node n = make(NodeKind::TupleLit, e.pos);
            for (const auto& el : t.elements) n.children.push_back(lower_expr(*el));
            return n;
          },
          [&](const ast::ListLit& t) {
            Node n = make(NodeKind::ListLit, e.pos);
            for (const auto& el : t.elements) n.children.push_back(lower_expr(*el));
            return n;
          },
      },
      e.node);
}

Node lower_block(const ast::Block& block) {
  Node n = make(NodeKind::Block, block.pos);
  for (const auto& s : block.stmts) n.children.push_back(lower_stmt(*s));
  return n;
}

Node lower_stmt(const ast::Stmt& s) {
  return std::visit(
      Overloaded{
          [&](const ast::Let& x) {
            Node n = make(NodeKind::Let, s.pos);
            n.name = x.name;
            n.children.push_back(lower_expr(*x.value));
            return n;
          },
          [&](const ast::Var& x) {
            Node n = make(NodeKind::Var, s.pos);
            n.name = x.name;
            n.children.push_back(lower_expr(*x.value));
            return n;
          },
          [&](const ast::Assign& x) {
            Node n = make(NodeKind::Assign, s.pos);
            n.name = x.name;
            n.children.push_back(lower_expr(*x.value));
            return n;
          },
          [&](const ast::If& x) {
            Node n = make(NodeKind::If, s.pos);
            n.children.push_back(lower_expr(*x.cond));
            n.children.push_back(lower_block(x.then_block));
            if (x.else_branch) n.children.push_back(lower_stmt(*x.else_branch));
            return n;
          },
          [&](const ast::While& x) {
            Node n = make(NodeKind::While, s.pos);
            n.children.push_back(lower_expr(*x.cond));
            n.children.push_back(lower_block(x.body));
            return n;
          },
          [&](const ast::Return& x) {
            Node n = make(NodeKind::Return, s.pos);
            if (x.value) n.children.push_back(lower_expr(*x.value));
            return n;
          },
          [&](const ast::ExprStmt& x) {
            Node n = make(NodeKind::ExprStmt, s.pos);
            n.children.push_back(lower_expr(*x.expr));
            return n;
          },
          [&](const ast::Block& b) { return lower_block(b); },
      },
      s.node);
}

ir::Function lower_function(const ast::FunctionDecl& f, const std::string& augment_target) {
  ir::Function out;
  out.pos = f.pos;
  out.name = f.name;
  out.local = f.local;
  out.params = f.params;
  out.param_pos = f.param_pos;
  out.body = lower_block(f.body);
  out.synthetic = f.synthetic;
  out.augment_target = augment_target;
  return out;
}

}  // namespace

ir::Module lower(const ast::Module& module) {
  ir::Module out;
  out.name = module.name;
  for (const auto& imp : module.imports) out.imports.push_back({imp.pos, imp.name});
  for (const auto& s : module.structures) out.structures.push_back({s.pos, s.name, s.fields});
  for (const auto& f : module.functions) out.functions.push_back(lower_function(f, ""));
  for (const auto& a : module.augmentations) {
    ir::Augmentation aug{a.pos, a.target, {}};
    for (const auto& f : a.functions) {
      aug.functions.push_back(static_cast<std::uint32_t>(out.functions.size()));
      out.functions.push_back(lower_function(f, a.target));
    }
    out.augmentations.push_back(std::move(aug));
  }
  return out;
}

std::string_view ir::to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Const: return "Const";
    case NodeKind::Ref: return "Ref";
    case NodeKind::Binary: return "Binary";
    case NodeKind::Unary: return "Unary";
    case NodeKind::Call: return "Call";
    case NodeKind::MethodCall: return "MethodCall";
    case NodeKind::Lambda: return "Lambda";
    case NodeKind::MakeClosure: return "MakeClosure";
    case NodeKind::TupleLit: return "Tuple";
    case NodeKind::ListLit: return "List";
    case NodeKind::Let: return "Let";
    case NodeKind::Var: return "Var";
    case NodeKind::Assign: return "Assign";
    case NodeKind::If: return "If";
    case NodeKind::While: return "While";
    case NodeKind::Return: return "Return";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::Block: return "Block";
  }
  return "?";
}

}  // namespace minigolo
