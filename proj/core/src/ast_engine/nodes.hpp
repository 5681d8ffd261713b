#pragma once

// Concrete node classes of the tree-walking engine. Private to the engine.

#include <memory>
#include <vector>

#include "minigolo/ast_engine/engine.hpp"
#include "minigolo/ast_engine/exec_tree.hpp"

namespace minigolo::ast_engine {

using ExprPtr = std::unique_ptr<ExprNode>;
using StmtPtr = std::unique_ptr<StmtNode>;

class LiteralNode final : public ExprNode {
 public:
  LiteralNode(SourcePos pos, const Value& v) : ExprNode(NodeKind::Literal, pos), value_(Typed::unboxed(v)) {}
  Typed eval(Frame&) override {
    ++count_;
    return value_;
  }
  void children(std::vector<const ExecNode*>&) const override {}

 private:
  Typed value_;
};

class LocalReadNode final : public ExprNode {
 public:
  LocalReadNode(SourcePos pos, std::uint32_t slot) : ExprNode(NodeKind::LocalRead, pos), slot_(slot) {}
  Typed eval(Frame& frame) override {
    ++count_;
    return frame.slots[slot_];
  }
  void children(std::vector<const ExecNode*>&) const override {}
  std::uint32_t slot() const { return slot_; }

 private:
  std::uint32_t slot_;
};

/// Reference to a module function used as a value.
class GlobalRefNode final : public ExprNode {
 public:
  GlobalRefNode(SourcePos pos, Value fn) : ExprNode(NodeKind::GlobalRef, pos), fn_(std::move(fn)) {}
  Typed eval(Frame&) override {
    ++count_;
    return Typed::of(fn_);
  }
  void children(std::vector<const ExecNode*>&) const override {}

 private:
  Value fn_;
};

/// let/var/assignment. Specialized stores keep Bool and numbers unboxed in the slot.
class LocalWriteNode final : public StmtNode {
 public:
  LocalWriteNode(SourcePos pos, std::uint32_t slot, ExprPtr value, ExecTree& tree)
      : StmtNode(NodeKind::LocalWrite, pos), slot_(slot), value_(std::move(value)), tree_(tree) {
    if (!tree.options.specialize) state_ = SpecState::generic();
  }
  Flow exec(Frame& frame) override;
  const SpecState* spec_state() const override { return &state_; }
  void children(std::vector<const ExecNode*>& out) const override { out.push_back(value_.get()); }

 private:
  std::uint32_t slot_;
  ExprPtr value_;
  ExecTree& tree_;
  SpecState state_;
};

class BranchNode final : public StmtNode {
 public:
  BranchNode(SourcePos pos, ExprPtr cond, StmtPtr then_branch, StmtPtr else_branch)
      : StmtNode(NodeKind::Branch, pos),
        cond_(std::move(cond)),
        then_(std::move(then_branch)),
        else_(std::move(else_branch)) {}
  Flow exec(Frame& frame) override;
  void children(std::vector<const ExecNode*>& out) const override {
    out.push_back(cond_.get());
    out.push_back(then_.get());
    if (else_) out.push_back(else_.get());
  }

 private:
  ExprPtr cond_;
  StmtPtr then_;
  StmtPtr else_;
};

class LoopNode final : public StmtNode {
 public:
  LoopNode(SourcePos pos, ExprPtr cond, StmtPtr body)
      : StmtNode(NodeKind::Loop, pos), cond_(std::move(cond)), body_(std::move(body)) {}
  Flow exec(Frame& frame) override;
  void children(std::vector<const ExecNode*>& out) const override {
    out.push_back(cond_.get());
    out.push_back(body_.get());
  }

 private:
  ExprPtr cond_;
  StmtPtr body_;
};

class ReturnNode final : public StmtNode {
 public:
  ReturnNode(SourcePos pos, ExprPtr value) : StmtNode(NodeKind::Return, pos), value_(std::move(value)) {}
  Flow exec(Frame& frame) override {
    ++count_;
    frame.result = value_ ? value_->eval(frame) : Typed{};
    return Flow::Return;
  }
  void children(std::vector<const ExecNode*>& out) const override {
    if (value_) out.push_back(value_.get());
  }

 private:
  ExprPtr value_;
};

class BlockNode final : public StmtNode {
 public:
  BlockNode(SourcePos pos, std::vector<StmtPtr> stmts) : StmtNode(NodeKind::Block, pos), stmts_(std::move(stmts)) {}
  Flow exec(Frame& frame) override {
    ++count_;
    for (const auto& s : stmts_) {
      frame.current = s.get();
      if (s->exec(frame) == Flow::Return) return Flow::Return;
    }
    return Flow::Normal;
  }
  void children(std::vector<const ExecNode*>& out) const override {
    for (const auto& s : stmts_) out.push_back(s.get());
  }

 private:
  std::vector<StmtPtr> stmts_;
};

class ExprStmtNode final : public StmtNode {
 public:
  ExprStmtNode(SourcePos pos, ExprPtr expr) : StmtNode(NodeKind::ExprStmt, pos), expr_(std::move(expr)) {}
  Flow exec(Frame& frame) override {
    ++count_;
    expr_->eval(frame);
    return Flow::Normal;
  }
  void children(std::vector<const ExecNode*>& out) const override { out.push_back(expr_.get()); }

 private:
  ExprPtr expr_;
};

using PrimOp = Typed (*)(const Typed&, const Typed&);

class BinaryOpNode final : public ExprNode {
 public:
  BinaryOpNode(SourcePos pos, BinaryOp op, ExprPtr lhs, ExprPtr rhs, ExecTree& tree)
      : ExprNode(NodeKind::BinaryOp, pos), op_(op), lhs_(std::move(lhs)), rhs_(std::move(rhs)), tree_(tree) {
    if (!tree.options.specialize) state_ = SpecState::generic();
  }
  Typed eval(Frame& frame) override;
  const SpecState* spec_state() const override { return &state_; }
  void children(std::vector<const ExecNode*>& out) const override {
    out.push_back(lhs_.get());
    out.push_back(rhs_.get());
  }

 private:
  Typed rewrite(const Typed& a, const Typed& b);

  BinaryOp op_;
  ExprPtr lhs_;
  ExprPtr rhs_;
  ExecTree& tree_;
  SpecState state_;
  PrimOp fast_ = nullptr;
};

class UnaryOpNode final : public ExprNode {
 public:
  UnaryOpNode(SourcePos pos, UnaryOp op, ExprPtr operand, ExecTree& tree)
      : ExprNode(NodeKind::UnaryOp, pos), op_(op), operand_(std::move(operand)), tree_(tree) {
    if (!tree.options.specialize) state_ = SpecState::generic();
  }
  Typed eval(Frame& frame) override;
  const SpecState* spec_state() const override { return &state_; }
  void children(std::vector<const ExecNode*>& out) const override { out.push_back(operand_.get()); }

 private:
  UnaryOp op_;
  ExprPtr operand_;
  ExecTree& tree_;
  SpecState state_;
};

class LogicalNode final : public ExprNode {
 public:
  LogicalNode(SourcePos pos, BinaryOp op, ExprPtr lhs, ExprPtr rhs)
      : ExprNode(NodeKind::Logical, pos), op_(op), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}
  Typed eval(Frame& frame) override;
  void children(std::vector<const ExecNode*>& out) const override {
    out.push_back(lhs_.get());
    out.push_back(rhs_.get());
  }

 private:
  BinaryOp op_;
  ExprPtr lhs_;
  ExprPtr rhs_;
};

/// Base of call and method-call nodes.
class DispatchNode : public ExprNode {
 public:
  DispatchNode(NodeKind kind, SourcePos pos, std::vector<ExprPtr> args, const ExecTree& tree)
      : ExprNode(kind, pos),
        args_(std::move(args)),
        cache_(tree.options.dispatch_depth, !tree.options.specialize) {}
  const DispatchCache* cache() const override { return &cache_; }
  void children(std::vector<const ExecNode*>& out) const override {
    for (const auto& a : args_) out.push_back(a.get());
  }

 protected:
  std::vector<ExprPtr> args_;
  DispatchCache cache_;
};

/// Call of a module function, structure constructor or native by name.
class GlobalCallNode final : public DispatchNode {
 public:
  GlobalCallNode(SourcePos pos, std::string name, std::vector<ExprPtr> args, const ExecTree& tree)
      : DispatchNode(NodeKind::Call, pos, std::move(args), tree), name_(std::move(name)) {}
  Typed eval(Frame& frame) override;

 private:
  std::string name_;
};

/// Call through a local holding a function reference or closure.
class LocalCallNode final : public DispatchNode {
 public:
  LocalCallNode(SourcePos pos, std::uint32_t slot, std::vector<ExprPtr> args, const ExecTree& tree)
      : DispatchNode(NodeKind::Call, pos, std::move(args), tree), slot_(slot) {}
  Typed eval(Frame& frame) override;

 private:
  std::uint32_t slot_;
};

/// `receiver: name(args)`; args_[0] is the receiver.
class MethodCallNode final : public DispatchNode {
 public:
  MethodCallNode(SourcePos pos, std::string name, std::vector<ExprPtr> args, const ExecTree& tree)
      : DispatchNode(NodeKind::MethodCall, pos, std::move(args), tree), name_(std::move(name)) {}
  Typed eval(Frame& frame) override;

 private:
  std::string name_;
};

class ClosureMakeNode final : public ExprNode {
 public:
  ClosureMakeNode(SourcePos pos, std::uint32_t function, std::string name, std::vector<ExprPtr> captures)
      : ExprNode(NodeKind::ClosureMake, pos),
        function_(function),
        name_(std::move(name)),
        captures_(std::move(captures)) {}
  Typed eval(Frame& frame) override;
  void children(std::vector<const ExecNode*>& out) const override {
    for (const auto& c : captures_) out.push_back(c.get());
  }

 private:
  std::uint32_t function_;
  std::string name_;
  std::vector<ExprPtr> captures_;
};

class CollectionNode final : public ExprNode {
 public:
  CollectionNode(NodeKind kind, SourcePos pos, std::vector<ExprPtr> items)
      : ExprNode(kind, pos), items_(std::move(items)) {}
  Typed eval(Frame& frame) override;
  void children(std::vector<const ExecNode*>& out) const override {
    for (const auto& c : items_) out.push_back(c.get());
  }

 private:
  std::vector<ExprPtr> items_;
};

}  // namespace minigolo::ast_engine
