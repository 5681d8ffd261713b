#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minigolo/frontend/ast.hpp"
#include "minigolo/support/operator_kind.hpp"
#include "minigolo/support/source_pos.hpp"

namespace minigolo::ir {

enum class NodeKind : std::uint8_t {
  // expressions
  Const,
  Ref,
  Binary,
  Unary,
  Call,
  MethodCall,
  Lambda,
  MakeClosure,
  TupleLit,
  ListLit,
  // statements
  Let,
  Var,
  Assign,
  If,
  While,
  Return,
  ExprStmt,
  Block,
};

std::string_view to_string(NodeKind kind);

/// How a Ref/Call/Assign name resolves once slots are allocated.
enum class Binding : std::uint8_t { Unresolved, Local, Global };

/// Uniform IR node. Child layout by kind:
///   Binary [lhs, rhs] | Unary [operand] | Call [args...] | MethodCall [receiver, args...]
///   Lambda [body] | MakeClosure [captured Refs...] | TupleLit/ListLit [elements...]
///   Let/Var/Assign [value] | If [cond, then, else?] | While [cond, body]
///   Return [value?] | ExprStmt [expr] | Block [stmts...]
struct Node {
  NodeKind kind = NodeKind::Block;
  SourcePos pos;
  std::vector<Node> children;

  std::string name;  // Ref, Call, MethodCall, Let, Var, Assign, MakeClosure target
  ast::Literal literal;
  BinaryOp binary_op = BinaryOp::Plus;
  UnaryOp unary_op = UnaryOp::Neg;

  Binding binding = Binding::Unresolved;
  std::int32_t slot = -1;

  std::vector<std::string> params;   // Lambda
  std::int32_t function_index = -1;  // MakeClosure

  std::size_t arg_count() const {
    return kind == NodeKind::MethodCall ? children.size() - 1 : children.size();
  }
};

struct Function {
  SourcePos pos;
  std::string name;
  bool local = false;
  std::vector<std::string> params;  // captured params first, then declared ones
  std::vector<SourcePos> param_pos;
  Node body;  // always a Block
  std::uint32_t local_slots = 0;
  bool synthetic = false;
  std::uint32_t capture_count = 0;
  /// Non-empty for functions declared inside `augment <target> { ... }`.
  std::string augment_target;

  /// `Point.norm2` for augmentations, the plain name otherwise.
  std::string display_name() const {
    return augment_target.empty() ? name : augment_target + "." + name;
  }
};

struct Structure {
  SourcePos pos;
  std::string name;
  std::vector<std::string> fields;
};

struct Augmentation {
  SourcePos pos;
  std::string target;
  std::vector<std::uint32_t> functions;  // indices into Module::functions
};

struct Import {
  SourcePos pos;
  std::string name;
};

struct Module {
  std::string name;
  std::vector<Import> imports;
  std::vector<Structure> structures;
  std::vector<Augmentation> augmentations;
  std::vector<Function> functions;
};

}  // namespace minigolo::ir
