#include "minigolo/frontend/parser.hpp"

#include <cassert>

#include "minigolo/frontend/lexer.hpp"
#include "minigolo/support/errors.hpp"

namespace minigolo {

namespace {

constexpr std::size_t kMaxLookahead = 2;

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::Eof) {
      throw ParseError({}, {"end of file"}, "unterminated token stream");
    }
  }

  ast::Module module() {
    ast::Module m;
    m.pos = current().pos;
    expect_keyword("module");
    m.name = qualified_name();
    while (current().is_keyword("import")) {
      ast::Import imp;
      imp.pos = current().pos;
      advance();
      imp.name = qualified_name();
      m.imports.push_back(std::move(imp));
    }
    for (;;) {
      const Token& t = current();
      if (t.kind == TokenKind::Eof) break;
      if (t.is_keyword("struct")) {
        m.structures.push_back(structure());
      } else if (t.is_keyword("augment")) {
        m.augmentations.push_back(augment());
      } else if (t.is_keyword("function") || t.is_keyword("local")) {
        m.functions.push_back(function());
      } else {
        fail({"'struct'", "'augment'", "'function'", "'local'", "end of file"});
      }
    }
    return m;
  }

  std::size_t max_lookahead() const { return max_lookahead_; }

 private:
  const Token& peek(std::size_t ahead) {
    assert(ahead < kMaxLookahead && "grammar is LL(2)");
    max_lookahead_ = std::max(max_lookahead_, ahead + 1);
    std::size_t index = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[index];
  }
  const Token& current() { return peek(0); }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = current();
    throw ParseError(t.pos, std::move(expected), describe(t));
  }

  const Token& expect_symbol(std::string_view sym) {
    if (!current().is_symbol(sym)) fail({"'" + std::string(sym) + "'"});
    return advance();
  }
  const Token& expect_keyword(std::string_view kw) {
    if (!current().is_keyword(kw)) fail({"'" + std::string(kw) + "'"});
    return advance();
  }
  const Token& expect_identifier() {
    if (current().kind != TokenKind::Identifier) fail({"identifier"});
    return advance();
  }

  std::string qualified_name() {
    std::string name = expect_identifier().lexeme;
    while (current().is_symbol(".")) {
      advance();
      name += '.';
      name += expect_identifier().lexeme;
    }
    return name;
  }

  ast::StructureDecl structure() {
    ast::StructureDecl s;
    s.pos = current().pos;
    expect_keyword("struct");
    s.name = expect_identifier().lexeme;
    expect_symbol("=");
    expect_symbol("{");
    s.fields.push_back(expect_identifier().lexeme);
    while (current().is_symbol(",")) {
      advance();
      s.fields.push_back(expect_identifier().lexeme);
    }
    expect_symbol("}");
    return s;
  }

  ast::AugmentDecl augment() {
    ast::AugmentDecl a;
    a.pos = current().pos;
    expect_keyword("augment");
    a.target = qualified_name();
    expect_symbol("{");
    while (!current().is_symbol("}")) {
      if (!current().is_keyword("function") && !current().is_keyword("local")) {
        fail({"'function'", "'local'", "'}'"});
      }
      a.functions.push_back(function());
    }
    advance();
    return a;
  }

  ast::FunctionDecl function() {
    ast::FunctionDecl f;
    f.pos = current().pos;
    if (current().is_keyword("local")) {
      f.local = true;
      advance();
    }
    expect_keyword("function");
    f.name = expect_identifier().lexeme;
    expect_symbol("=");
    if (!current().is_symbol("|")) fail({"'|'"});
    ast::Lambda lambda = lambda_literal(&f.param_pos);
    f.params = std::move(lambda.params);
    f.body = std::move(lambda.body);
    f.expression_body = lambda.expression_body;
    return f;
  }

  // lambda := "|" [ IDENT { "," IDENT } ] "|" ( block | "->" expr )
  //         | "->" expr                         (parameterless shorthand)
  ast::Lambda lambda_literal(std::vector<SourcePos>* param_pos = nullptr) {
    ast::Lambda lambda;
    if (current().is_symbol("|")) {
      advance();
      if (!current().is_symbol("|")) {
        for (;;) {
          const Token& p = expect_identifier();
          lambda.params.push_back(p.lexeme);
          if (param_pos) param_pos->push_back(p.pos);
          if (!current().is_symbol(",")) break;
          advance();
        }
      }
      if (!current().is_symbol("|")) fail({"','", "'|'"});
      advance();
      if (current().is_symbol("{")) {
        lambda.body = block();
        return lambda;
      }
      if (!current().is_symbol("->")) fail({"'{'", "'->'"});
    }
    const SourcePos arrow = expect_symbol("->").pos;
    lambda.expression_body = true;
    lambda.body.pos = arrow;
    auto ret = std::make_unique<ast::Stmt>();
    ret->pos = current().pos;
    ret->node = ast::Return{expression()};
    lambda.body.stmts.push_back(std::move(ret));
    return lambda;
  }

  ast::Block block() {
    ast::Block b;
    b.pos = expect_symbol("{").pos;
    while (!current().is_symbol("}")) {
      if (current().kind == TokenKind::Eof) fail({"'}'"});
      b.stmts.push_back(statement());
    }
    advance();
    return b;
  }

  bool starts_expression(const Token& t) {
    switch (t.kind) {
      case TokenKind::Identifier:
      case TokenKind::IntLiteral:
      case TokenKind::LongLiteral:
      case TokenKind::DoubleLiteral:
      case TokenKind::StringLiteral:
        return true;
      case TokenKind::Keyword:
        return t.lexeme == "true" || t.lexeme == "false" || t.lexeme == "null" ||
               t.lexeme == "not" || t.lexeme == "list";
      case TokenKind::Operator:
        return t.lexeme == "-" || t.lexeme == "->";
      case TokenKind::Punctuation:
        return t.lexeme == "(" || t.lexeme == "[" || t.lexeme == "|";
      case TokenKind::Eof:
        return false;
    }
    return false;
  }

  ast::StmtPtr statement() {
    auto stmt = std::make_unique<ast::Stmt>();
    stmt->pos = current().pos;
    const Token& t = current();
    if (t.is_keyword("let") || t.is_keyword("var")) {
      const bool is_let = t.lexeme == "let";
      advance();
      std::string name = expect_identifier().lexeme;
      expect_symbol("=");
      ast::ExprPtr value = expression();
      if (is_let) {
        stmt->node = ast::Let{std::move(name), std::move(value)};
      } else {
        stmt->node = ast::Var{std::move(name), std::move(value)};
      }
    } else if (t.is_keyword("if")) {
      stmt->node = if_statement();
    } else if (t.is_keyword("while")) {
      advance();
      ast::While w;
      w.cond = expression();
      w.body = block();
      stmt->node = std::move(w);
    } else if (t.is_keyword("return")) {
      advance();
      ast::Return r;
      if (starts_expression(current())) r.value = expression();
      stmt->node = std::move(r);
    } else if (t.kind == TokenKind::Identifier && peek(1).is(TokenKind::Operator, "=")) {
      std::string name = advance().lexeme;
      advance();
      stmt->node = ast::Assign{std::move(name), expression()};
    } else if (starts_expression(t)) {
      stmt->node = ast::ExprStmt{expression()};
    } else {
      fail({"statement", "'}'"});
    }
    return stmt;
  }

  ast::If if_statement() {
    expect_keyword("if");
    ast::If node;
    node.cond = expression();
    node.then_block = block();
    if (current().is_keyword("else")) {
      advance();
      auto else_stmt = std::make_unique<ast::Stmt>();
      else_stmt->pos = current().pos;
      if (current().is_keyword("if")) {
        else_stmt->node = if_statement();
      } else if (current().is_symbol("{")) {
        else_stmt->node = block();
      } else {
        fail({"'{'", "'if'"});
      }
      node.else_branch = std::move(else_stmt);
    }
    return node;
  }

  // Precedence, low to high: or; and; == !=; < <= > >=; + -; * / %; unary; postfix.
  ast::ExprPtr expression() { return binary_level(0); }

  static int level_of(const Token& t) {
    if (t.is_keyword("or")) return 0;
    if (t.is_keyword("and")) return 1;
    if (t.kind != TokenKind::Operator) return -1;
    const std::string& s = t.lexeme;
    if (s == "==" || s == "!=") return 2;
    if (s == "<" || s == "<=" || s == ">" || s == ">=") return 3;
    if (s == "+" || s == "-") return 4;
    if (s == "*" || s == "/" || s == "%") return 5;
    return -1;
  }

  ast::ExprPtr binary_level(int level) {
    if (level > 5) return unary();
    ast::ExprPtr lhs = binary_level(level + 1);
    while (level_of(current()) == level) {
      const Token& op_token = advance();
      auto op = binary_op_from_symbol(op_token.lexeme);
      assert(op.has_value());
      auto node = std::make_unique<ast::Expr>();
      node->pos = op_token.pos;
      node->node = ast::Binary{*op, std::move(lhs), binary_level(level + 1)};
      lhs = std::move(node);
    }
    return lhs;
  }

  ast::ExprPtr unary() {
    const Token& t = current();
    if (t.is(TokenKind::Operator, "-") || t.is_keyword("not")) {
      const SourcePos pos = t.pos;
      const UnaryOp op = t.lexeme == "-" ? UnaryOp::Neg : UnaryOp::Not;
      advance();
      auto node = std::make_unique<ast::Expr>();
      node->pos = pos;
      node->node = ast::Unary{op, unary()};
      return node;
    }
    return postfix();
  }

  ast::ExprPtr postfix() {
    ast::ExprPtr expr = primary();
    while (current().is_symbol(":")) {
      advance();
      const Token& name = expect_identifier();
      auto node = std::make_unique<ast::Expr>();
      node->pos = name.pos;
      ast::MethodCall call;
      call.receiver = std::move(expr);
      call.name = name.lexeme;
      expect_symbol("(");
      call.args = arguments();
      node->node = std::move(call);
      expr = std::move(node);
    }
    return expr;
  }

  // Parses `[args] ")"`; the opening delimiter is already consumed.
  std::vector<ast::ExprPtr> arguments(std::string_view close = ")") {
    std::vector<ast::ExprPtr> args;
    if (current().is_symbol(close)) {
      advance();
      return args;
    }
    for (;;) {
      args.push_back(expression());
      if (current().is_symbol(",")) {
        advance();
        continue;
      }
      if (current().is_symbol(close)) {
        advance();
        return args;
      }
      fail({"','", "'" + std::string(close) + "'"});
    }
  }

  ast::ExprPtr primary() {
    auto node = std::make_unique<ast::Expr>();
    const Token& t = current();
    node->pos = t.pos;
    switch (t.kind) {
      case TokenKind::IntLiteral:
      case TokenKind::LongLiteral: {
        ast::Literal lit;
        lit.kind = t.kind == TokenKind::IntLiteral ? ast::LiteralKind::Int : ast::LiteralKind::Long;
        lit.integer = t.int_value;
        node->node = std::move(lit);
        advance();
        return node;
      }
      case TokenKind::DoubleLiteral: {
        ast::Literal lit;
        lit.kind = ast::LiteralKind::Double;
        lit.real = t.double_value;
        node->node = std::move(lit);
        advance();
        return node;
      }
      case TokenKind::StringLiteral: {
        ast::Literal lit;
        lit.kind = ast::LiteralKind::Str;
        lit.text = t.string_value;
        node->node = std::move(lit);
        advance();
        return node;
      }
      case TokenKind::Identifier: {
        std::string name = t.lexeme;
        if (peek(1).is_symbol("(")) {
          advance();
          advance();
          node->node = ast::Call{std::move(name), arguments()};
        } else {
          advance();
          node->node = ast::Reference{std::move(name)};
        }
        return node;
      }
      case TokenKind::Keyword: {
        if (t.lexeme == "true" || t.lexeme == "false") {
          ast::Literal lit;
          lit.kind = ast::LiteralKind::Bool;
          lit.boolean = t.lexeme == "true";
          node->node = std::move(lit);
          advance();
          return node;
        }
        if (t.lexeme == "null") {
          node->node = ast::Literal{};
          advance();
          return node;
        }
        if (t.lexeme == "list") {
          advance();
          expect_symbol("[");
          node->node = ast::ListLit{arguments("]")};
          return node;
        }
        break;
      }
      case TokenKind::Punctuation:
      case TokenKind::Operator: {
        if (t.lexeme == "(") {
          advance();
          ast::ExprPtr inner = expression();
          expect_symbol(")");
          return inner;
        }
        if (t.lexeme == "[") {
          advance();
          node->node = ast::TupleLit{arguments("]")};
          return node;
        }
        if (t.lexeme == "|" || t.lexeme == "->") {
          node->node = lambda_literal();
          return node;
        }
        break;
      }
      case TokenKind::Eof:
        break;
    }
    fail({"expression"});
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t max_lookahead_ = 0;
};

}  // namespace

ast::Module parse(std::span<const Token> tokens, ParseStats* stats) {
  Parser parser(tokens);
  ast::Module m = parser.module();
  if (stats) stats->max_lookahead = parser.max_lookahead();
  return m;
}

ast::Module parse_source(std::string_view source) {
  auto tokens = tokenize(source);
  return parse(tokens);
}

}  // namespace minigolo
