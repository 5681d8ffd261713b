#include "minigolo/frontend/ast_dump.hpp"

#include <charconv>

namespace minigolo {

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

std::string format_double(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, end);
}

std::string literal_text(const ast::Literal& lit) {
  switch (lit.kind) {
    case ast::LiteralKind::Int: return "Int " + std::to_string(lit.integer);
    case ast::LiteralKind::Long: return "Long " + std::to_string(lit.integer);
    case ast::LiteralKind::Double: return "Double " + format_double(lit.real);
    case ast::LiteralKind::Str: return "Str " + quote(lit.text);
    case ast::LiteralKind::Bool: return lit.boolean ? "Bool true" : "Bool false";
    case ast::LiteralKind::Null: return "Null";
  }
  return "?";
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

class Dumper {
 public:
  std::string take() { return std::move(out_); }

  void module(const ast::Module& m) {
    line(0, "Module " + m.name);
    for (const auto& imp : m.imports) line(1, "Import " + imp.name);
    for (const auto& s : m.structures) {
      std::string text = "Struct " + s.name;
      for (const auto& f : s.fields) text += " " + f;
      line(1, text);
    }
    for (const auto& a : m.augmentations) {
      line(1, "Augment " + a.target);
      for (const auto& f : a.functions) function(f, 2);
    }
    for (const auto& f : m.functions) function(f, 1);
  }

  void expr(const ast::Expr& e, int depth) {
    std::visit(
        Overloaded{
            [&](const ast::Literal& lit) { line(depth, "Literal " + literal_text(lit)); },
            [&](const ast::Reference& r) { line(depth, "Reference " + r.name); },
            [&](const ast::Binary& b) {
              line(depth, "Binary " + std::string(symbol(b.op)));
              expr(*b.lhs, depth + 1);
              expr(*b.rhs, depth + 1);
            },
            [&](const ast::Unary& u) {
              line(depth, "Unary " + std::string(symbol(u.op)));
              expr(*u.operand, depth + 1);
            },
            [&](const ast::Call& c) {
              line(depth, "Call " + c.name);
              for (const auto& a : c.args) expr(*a, depth + 1);
            },
            [&](const ast::MethodCall& c) {
              line(depth, "MethodCall " + c.name);
              expr(*c.receiver, depth + 1);
              for (const auto& a : c.args) expr(*a, depth + 1);
            },
            [&](const ast::Lambda& l) {
              std::string text = "Lambda";
              for (const auto& p : l.params) text += " " + p;
              line(depth, text);
              block(l.body, depth + 1);
            },
            [&](const ast::TupleLit& t) {
              line(depth, "Tuple");
              for (const auto& el : t.elements) expr(*el, depth + 1);
            },
            [&](const ast::ListLit& t) {
              line(depth, "List");
              for (const auto& el : t.elements) expr(*el, depth + 1);
            },
        },
        e.node);
  }

 private:
  void line(int depth, const std::string& text) {
    out_.append(static_cast<std::size_t>(depth) * 2, ' ');
    out_ += text;
    out_ += '\n';
  }

  void function(const ast::FunctionDecl& f, int depth) {
    line(depth, "Function " + f.name + (f.local ? " local" : ""));
    std::string params = "Params";
    for (const auto& p : f.params) params += " " + p;
    line(depth + 1, params);
    block(f.body, depth + 1);
  }

  void block(const ast::Block& b, int depth) {
    line(depth, "Block");
    for (const auto& s : b.stmts) stmt(*s, depth + 1);
  }

  void stmt(const ast::Stmt& s, int depth) {
    std::visit(Overloaded{
                   [&](const ast::Let& n) {
                     line(depth, "Let " + n.name);
                     expr(*n.value, depth + 1);
                   },
                   [&](const ast::Var& n) {
                     line(depth, "Var " + n.name);
                     expr(*n.value, depth + 1);
                   },
                   [&](const ast::Assign& n) {
                     line(depth, "Assign " + n.name);
                     expr(*n.value, depth + 1);
                   },
                   [&](const ast::If& n) {
                     line(depth, "If");
                     expr(*n.cond, depth + 1);
                     block(n.then_block, depth + 1);
                     if (n.else_branch) stmt(*n.else_branch, depth + 1);
                   },
                   [&](const ast::While& n) {
                     line(depth, "While");
                     expr(*n.cond, depth + 1);
                     block(n.body, depth + 1);
                   },
                   [&](const ast::Return& n) {
                     line(depth, "Return");
                     if (n.value) expr(*n.value, depth + 1);
                   },
                   [&](const ast::ExprStmt& n) {
                     line(depth, "ExprStmt");
                     expr(*n.expr, depth + 1);
                   },
                   [&](const ast::Block& b) { block(b, depth); },
               },
               s.node);
  }

  std::string out_;
};

// Structural equality ----------------------------------------------------

bool equal(const ast::Expr& a, const ast::Expr& b);
bool equal(const ast::Stmt& a, const ast::Stmt& b);

bool equal(const ast::ExprPtr& a, const ast::ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return equal(*a, *b);
}

bool equal(const std::vector<ast::ExprPtr>& a, const std::vector<ast::ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

bool equal(const ast::Block& a, const ast::Block& b) {
  if (!(a.pos == b.pos) || a.stmts.size() != b.stmts.size()) return false;
  for (std::size_t i = 0; i < a.stmts.size(); ++i) {
    if (!equal(*a.stmts[i], *b.stmts[i])) return false;
  }
  return true;
}

bool equal(const ast::Expr& a, const ast::Expr& b) {
  if (!(a.pos == b.pos) || a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const ast::Literal& x) { return x == std::get<ast::Literal>(b.node); },
          [&](const ast::Reference& x) { return x.name == std::get<ast::Reference>(b.node).name; },
          [&](const ast::Binary& x) {
            const auto& y = std::get<ast::Binary>(b.node);
            return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
          },
          [&](const ast::Unary& x) {
            const auto& y = std::get<ast::Unary>(b.node);
            return x.op == y.op && equal(x.operand, y.operand);
          },
          [&](const ast::Call& x) {
            const auto& y = std::get<ast::Call>(b.node);
            return x.name == y.name && equal(x.args, y.args);
          },
          [&](const ast::MethodCall& x) {
            const auto& y = std::get<ast::MethodCall>(b.node);
            return x.name == y.name && equal(x.receiver, y.receiver) && equal(x.args, y.args);
          },
          [&](const ast::Lambda& x) {
            const auto& y = std::get<ast::Lambda>(b.node);
            return x.params == y.params && x.expression_body == y.expression_body &&
                   equal(x.body, y.body);
          },
          [&](const ast::TupleLit& x) {
            return equal(x.elements, std::get<ast::TupleLit>(b.node).elements);
          },
          [&](const ast::ListLit& x) {
            return equal(x.elements, std::get<ast::ListLit>(b.node).elements);
          },
      },
      a.node);
}

bool equal(const ast::Stmt& a, const ast::Stmt& b) {
  if (!(a.pos == b.pos) || a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const ast::Let& x) {
            const auto& y = std::get<ast::Let>(b.node);
            return x.name == y.name && equal(x.value, y.value);
          },
          [&](const ast::Var& x) {
            const auto& y = std::get<ast::Var>(b.node);
            return x.name == y.name && equal(x.value, y.value);
          },
          [&](const ast::Assign& x) {
            const auto& y = std::get<ast::Assign>(b.node);
            return x.name == y.name && equal(x.value, y.value);
          },
          [&](const ast::If& x) {
            const auto& y = std::get<ast::If>(b.node);
            if (!equal(x.cond, y.cond) || !equal(x.then_block, y.then_block)) return false;
            if (!x.else_branch || !y.else_branch) return !x.else_branch && !y.else_branch;
            return equal(*x.else_branch, *y.else_branch);
          },
          [&](const ast::While& x) {
            const auto& y = std::get<ast::While>(b.node);
            return equal(x.cond, y.cond) && equal(x.body, y.body);
          },
          [&](const ast::Return& x) { return equal(x.value, std::get<ast::Return>(b.node).value); },
          [&](const ast::ExprStmt& x) { return equal(x.expr, std::get<ast::ExprStmt>(b.node).expr); },
          [&](const ast::Block& x) { return equal(x, std::get<ast::Block>(b.node)); },
      },
      a.node);
}

bool equal(const ast::FunctionDecl& a, const ast::FunctionDecl& b) {
  return a.pos == b.pos && a.name == b.name && a.local == b.local && a.params == b.params &&
         a.param_pos == b.param_pos && a.expression_body == b.expression_body &&
         a.synthetic == b.synthetic && equal(a.body, b.body);
}

}  // namespace

std::string render_ast(const ast::Module& module) {
  Dumper d;
  d.module(module);
  return d.take();
}

std::string render_ast(const ast::Expr& expr) {
  Dumper d;
  d.expr(expr, 0);
  return d.take();
}

namespace ast {

bool structurally_equal(const Module& a, const Module& b) {
  if (!(a.pos == b.pos) || a.name != b.name) return false;
  if (a.imports.size() != b.imports.size() || a.structures.size() != b.structures.size() ||
      a.augmentations.size() != b.augmentations.size() ||
      a.functions.size() != b.functions.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.imports.size(); ++i) {
    if (a.imports[i].name != b.imports[i].name || !(a.imports[i].pos == b.imports[i].pos)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.structures.size(); ++i) {
    const auto& x = a.structures[i];
    const auto& y = b.structures[i];
    if (x.name != y.name || x.fields != y.fields || !(x.pos == y.pos)) return false;
  }
  for (std::size_t i = 0; i < a.augmentations.size(); ++i) {
    const auto& x = a.augmentations[i];
    const auto& y = b.augmentations[i];
    if (x.target != y.target || x.functions.size() != y.functions.size()) return false;
    for (std::size_t j = 0; j < x.functions.size(); ++j) {
      if (!equal(x.functions[j], y.functions[j])) return false;
    }
  }
  for (std::size_t i = 0; i < a.functions.size(); ++i) {
    if (!equal(a.functions[i], b.functions[i])) return false;
  }
  return true;
}

}  // namespace ast

}  // namespace minigolo
