#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minigolo/ast_engine/specialization.hpp"
#include "minigolo/ast_engine/typed.hpp"
#include "minigolo/ir/ir.hpp"
#include "minigolo/runtime/program.hpp"
#include "minigolo/runtime/targets.hpp"
#include "minigolo/support/source_pos.hpp"

namespace minigolo::ast_engine {

class AstEngine;

enum class NodeKind : std::uint8_t {
  Literal,
  LocalRead,
  LocalWrite,
  GlobalRef,
  Branch,
  Loop,
  Return,
  BinaryOp,
  UnaryOp,
  Logical,
  Call,
  MethodCall,
  ClosureMake,
  Block,
  ExprStmt,
  TupleLit,
  ListLit,
};

std::string_view to_string(NodeKind kind);

class ExecNode;

/// Activation of one function call.
struct Frame {
  AstEngine& engine;
  Typed* slots;
  Typed result;
  const ExecNode* current = nullptr;  // statement being executed, for traces
};

enum class Flow : std::uint8_t { Normal, Return };

/// Inline cache of a call or method-call node: up to `depth` entries, then
/// permanently megamorphic (empty).
class DispatchCache {
 public:
  struct Entry {
    Discriminator guard;
    TargetPtr target;                    // null for closure calls
    std::optional<std::uint32_t> user_function;
  };

  DispatchCache(std::size_t depth, bool megamorphic) : depth_(depth), megamorphic_(megamorphic) {}

  /// Probes by discriminator; on a miss runs `lookup` and caches the result
  /// while below depth. The reference stays valid until the next miss.
  template <class Lookup>
  const Entry& dispatch(const Discriminator& d, Lookup&& lookup) {
    for (const auto& e : entries_) {
      if (e.guard == d) {
        ++hits_;
        return e;
      }
    }
    ++misses_;
    last_ = lookup();
    if (!megamorphic_) {
      if (entries_.size() < depth_) {
        entries_.push_back(last_);
      } else {
        megamorphic_ = true;
        retired_ = std::move(entries_);
        entries_.clear();
      }
    }
    return last_;
  }

  std::size_t size() const { return entries_.size(); }
  bool megamorphic() const { return megamorphic_; }
  std::size_t depth() const { return depth_; }
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  std::string describe() const;

 private:
  std::size_t depth_;
  bool megamorphic_;
  std::vector<Entry> entries_;
  std::vector<Entry> retired_;  // targets may still be running up the stack
  Entry last_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

/// A self-specializing interpreter node with an execution counter.
class ExecNode {
 public:
  ExecNode(NodeKind kind, SourcePos pos) : kind_(kind), pos_(pos) {}
  virtual ~ExecNode() = default;
  ExecNode(const ExecNode&) = delete;
  ExecNode& operator=(const ExecNode&) = delete;

  NodeKind kind() const { return kind_; }
  SourcePos pos() const { return pos_; }
  std::uint64_t exec_count() const { return count_; }

  virtual const SpecState* spec_state() const { return nullptr; }
  virtual const DispatchCache* cache() const { return nullptr; }
  virtual void children(std::vector<const ExecNode*>& out) const = 0;

  /// `uninit`, `spec(Int,Int)`, `generic`, `cache[n]`, `mega` or `-`.
  std::string state() const;

 protected:
  std::uint64_t count_ = 0;

 private:
  NodeKind kind_;
  SourcePos pos_;
};

class ExprNode : public ExecNode {
 public:
  using ExecNode::ExecNode;
  virtual Typed eval(Frame& frame) = 0;
};

class StmtNode : public ExecNode {
 public:
  using ExecNode::ExecNode;
  virtual Flow exec(Frame& frame) = 0;
};

struct ExecFunction {
  std::string name;
  std::uint32_t params = 0;
  std::uint32_t local_slots = 0;
  SourcePos pos;
  std::unique_ptr<StmtNode> body;  // the function's root Block
};

struct BuildOptions {
  /// false pins operator and store nodes to Generic and dispatch nodes to megamorphic.
  bool specialize = true;
  std::size_t dispatch_depth = 3;
};

/// Executable tree for a whole module. Mutable: nodes rewrite their own
/// state and count executions, so each engine instance builds its own.
class ExecTree {
 public:
  ProgramInfo program;
  std::vector<std::unique_ptr<ExecFunction>> functions;
  BuildOptions options;

  struct NodeRef {
    const ExecNode* node;
    std::uint32_t function;
  };
  /// Every node in build order.
  std::vector<NodeRef> nodes;

  /// Moves `state` to `next`, counting lattice violations (a transition that is not monotone).
  void transition(SpecState& state, const SpecState& next) {
    if (!state.allows(next)) ++lattice_violations;
    state = next;
  }
  std::uint64_t lattice_violations = 0;
};

/// Builds the executable tree. Accepts checked IR with lambdas in place
/// (lambdas get `__lambda$<n>` functions numbered like the closure lifter) or
/// lifted IR with MakeClosure nodes.
std::unique_ptr<ExecTree> build_exec_tree(const ir::Module& module, BuildOptions options = {});

/// Executed nodes sorted by count (descending):
/// `<count>  <kind>  <fn>:<line>:<col>  state=<state>`.
std::string dump_profile(const ExecTree& tree);

}  // namespace minigolo::ast_engine
