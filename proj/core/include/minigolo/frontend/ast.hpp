#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "minigolo/support/operator_kind.hpp"
#include "minigolo/support/source_pos.hpp"

namespace minigolo::ast {

enum class LiteralKind : std::uint8_t { Int, Long, Double, Str, Bool, Null };

struct Literal {
  LiteralKind kind = LiteralKind::Null;
  std::int64_t integer = 0;  // Int and Long
  double real = 0.0;
  std::string text;
  bool boolean = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

struct Block {
  SourcePos pos;
  std::vector<StmtPtr> stmts;
};

struct Reference {
  std::string name;
};
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Unary {
  UnaryOp op;
  ExprPtr operand;
};
struct Call {
  std::string name;
  std::vector<ExprPtr> args;
};
struct MethodCall {
  ExprPtr receiver;
  std::string name;
  std::vector<ExprPtr> args;
};
struct Lambda {
  std::vector<std::string> params;
  Block body;
  /// `-> expr` form; body then holds a single Return statement.
  bool expression_body = false;
};
struct TupleLit {
  std::vector<ExprPtr> elements;
};
struct ListLit {
  std::vector<ExprPtr> elements;
};

struct Expr {
  SourcePos pos;
  std::variant<Literal, Reference, Binary, Unary, Call, MethodCall, Lambda, TupleLit, ListLit> node;
};

struct Let {
  std::string name;
  ExprPtr value;
};
struct Var {
  std::string name;
  ExprPtr value;
};
struct Assign {
  std::string name;
  ExprPtr value;
};
struct If {
  ExprPtr cond;
  Block then_block;
  /// Either empty, a Block (plain else) or a single nested If (else-if chain).
  std::unique_ptr<Stmt> else_branch;
};
struct While {
  ExprPtr cond;
  Block body;
};
struct Return {
  ExprPtr value;  // may be null
};
struct ExprStmt {
  ExprPtr expr;
};

struct Stmt {
  SourcePos pos;
  std::variant<Let, Var, Assign, If, While, Return, ExprStmt, Block> node;
};

struct FunctionDecl {
  SourcePos pos;
  std::string name;
  bool local = false;
  std::vector<std::string> params;
  std::vector<SourcePos> param_pos;
  Block body;
  bool expression_body = false;
  bool synthetic = false;
};

struct StructureDecl {
  SourcePos pos;
  std::string name;
  std::vector<std::string> fields;
};

struct AugmentDecl {
  SourcePos pos;
  std::string target;  // qualified name
  std::vector<FunctionDecl> functions;
};

struct Import {
  SourcePos pos;
  std::string name;
};

struct Module {
  SourcePos pos;
  std::string name;
  std::vector<Import> imports;
  std::vector<StructureDecl> structures;
  std::vector<AugmentDecl> augmentations;
  std::vector<FunctionDecl> functions;
};

/// Deep structural equality (positions included).
bool structurally_equal(const Module& a, const Module& b);

}  // namespace minigolo::ast
