#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "minigolo/runtime/literal.hpp"
#include "nodes.hpp"

namespace minigolo::ast_engine {

namespace {

using ir::NodeKind;

void collect_lambda_offsets(const ir::Node& n, std::vector<std::uint32_t>& out) {
  if (n.kind == NodeKind::Lambda) out.push_back(n.pos.offset);
  for (const auto& c : n.children) collect_lambda_offsets(c, out);
}

/// Names a lambda body uses but does not bind, in order of first use.
class FreeNames {
 public:
  explicit FreeNames(const ir::Node& lambda) {
    scopes_.emplace_back(lambda.params.begin(), lambda.params.end());
    walk(lambda.children[0]);
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  bool bound(const std::string& name) const {
    return std::any_of(scopes_.begin(), scopes_.end(), [&](const auto& s) { return s.contains(name); });
  }
  void use(const std::string& name) {
    if (!bound(name) && std::find(names_.begin(), names_.end(), name) == names_.end()) {
      names_.push_back(name);
    }
  }
  void walk(const ir::Node& n) {
    switch (n.kind) {
      case NodeKind::Ref: use(n.name); return;
      case NodeKind::Call:
        use(n.name);
        for (const auto& c : n.children) walk(c);
        return;
      case NodeKind::Assign:
        walk(n.children[0]);
        use(n.name);
        return;
      case NodeKind::Let:
      case NodeKind::Var:
        walk(n.children[0]);
        scopes_.back().insert(n.name);
        return;
      case NodeKind::Block:
        scopes_.emplace_back();
        for (const auto& c : n.children) walk(c);
        scopes_.pop_back();
        return;
      case NodeKind::Lambda:
        scopes_.emplace_back(n.params.begin(), n.params.end());
        walk(n.children[0]);
        scopes_.pop_back();
        return;
      default:
        for (const auto& c : n.children) walk(c);
        return;
    }
  }

  std::vector<std::set<std::string>> scopes_;
  std::vector<std::string> names_;
};

class TreeBuilder {
 public:
  TreeBuilder(const ir::Module& module, ExecTree& tree) : module_(module), tree_(tree) {}

  void run() {
    tree_.program = ProgramInfo::from_ir(module_);
    std::vector<std::uint32_t> offsets;
    for (const auto& f : module_.functions) collect_lambda_offsets(f.body, offsets);
    std::sort(offsets.begin(), offsets.end());
    for (std::size_t i = 0; i < offsets.size(); ++i) lambda_numbers_[offsets[i]] = i;

    tree_.functions.resize(module_.functions.size());
    for (std::size_t i = 0; i < module_.functions.size(); ++i) {
      const auto& f = module_.functions[i];
      if (!f.augment_target.empty() || f.synthetic) continue;
      global_functions_.emplace(f.name, Value::function(static_cast<std::uint32_t>(i), f.name));
    }
    for (std::size_t i = 0; i < module_.functions.size(); ++i) {
      const auto& f = module_.functions[i];
      tree_.functions[i] = build_function(static_cast<std::uint32_t>(i), f.display_name(), f.pos,
                                          f.params, f.body);
    }
  }

 private:
  struct Context {
    std::uint32_t function;
    std::vector<std::map<std::string, std::uint32_t>> scopes;
    std::uint32_t next_slot = 0;
  };

  template <class N, class... Args>
  std::unique_ptr<N> make(Args&&... args) {
    auto node = std::make_unique<N>(std::forward<Args>(args)...);
    tree_.nodes.push_back({node.get(), ctx_->function});
    return node;
  }

  std::optional<std::uint32_t> resolve(const std::string& name) const {
    for (auto it = ctx_->scopes.rbegin(); it != ctx_->scopes.rend(); ++it) {
      if (auto found = it->find(name); found != it->end()) return found->second;
    }
    return std::nullopt;
  }

  std::uint32_t local_slot(const std::string& name, SourcePos pos) const {
    if (auto slot = resolve(name)) return *slot;
    throw std::logic_error("unresolved local " + name + " at " + to_string(pos));
  }

  std::unique_ptr<ExecFunction> build_function(std::uint32_t index, std::string name, SourcePos pos,
                                               const std::vector<std::string>& params,
                                               const ir::Node& body) {
    Context ctx{index, {}, 0};
    Context* saved = ctx_;
    ctx_ = &ctx;
    ctx.scopes.emplace_back();
    for (const auto& p : params) ctx.scopes.back()[p] = ctx.next_slot++;
    auto fn = std::make_unique<ExecFunction>();
    fn->name = std::move(name);
    fn->params = static_cast<std::uint32_t>(params.size());
    fn->pos = pos;
    fn->body = statement(body);
    fn->local_slots = ctx.next_slot;
    ctx_ = saved;
    return fn;
  }

  StmtPtr statement(const ir::Node& n) {
    switch (n.kind) {
      case NodeKind::Block: {
        ctx_->scopes.emplace_back();
        std::vector<StmtPtr> stmts;
        for (const auto& c : n.children) stmts.push_back(statement(c));
        ctx_->scopes.pop_back();
        return make<BlockNode>(n.pos, std::move(stmts));
      }
      case NodeKind::Let:
      case NodeKind::Var: {
        auto value = expression(n.children[0]);
        const auto slot = ctx_->next_slot++;
        ctx_->scopes.back()[n.name] = slot;
        return make<LocalWriteNode>(n.pos, slot, std::move(value), tree_);
      }
      case NodeKind::Assign: {
        auto value = expression(n.children[0]);
        return make<LocalWriteNode>(n.pos, local_slot(n.name, n.pos), std::move(value), tree_);
      }
      case NodeKind::If: {
        auto cond = expression(n.children[0]);
        auto then_branch = statement(n.children[1]);
        StmtPtr else_branch = n.children.size() > 2 ? statement(n.children[2]) : nullptr;
        return make<BranchNode>(n.pos, std::move(cond), std::move(then_branch), std::move(else_branch));
      }
      case NodeKind::While: {
        auto cond = expression(n.children[0]);
        auto body = statement(n.children[1]);
        return make<LoopNode>(n.pos, std::move(cond), std::move(body));
      }
      case NodeKind::Return:
        return make<ReturnNode>(n.pos, n.children.empty() ? nullptr : expression(n.children[0]));
      case NodeKind::ExprStmt:
        return make<ExprStmtNode>(n.pos, expression(n.children[0]));
      default:
        throw std::logic_error("not a statement: " + std::string(ir::to_string(n.kind)));
    }
  }

  std::vector<ExprPtr> expressions(const std::vector<ir::Node>& nodes) {
    std::vector<ExprPtr> out;
    out.reserve(nodes.size());
    for (const auto& c : nodes) out.push_back(expression(c));
    return out;
  }

  ExprPtr expression(const ir::Node& n) {
    switch (n.kind) {
      case NodeKind::Const: return make<LiteralNode>(n.pos, literal_value(n.literal));
      case NodeKind::Ref: {
        if (auto slot = resolve(n.name)) return make<LocalReadNode>(n.pos, *slot);
        auto fn = global_functions_.find(n.name);
        if (fn == global_functions_.end()) throw std::logic_error("unresolved reference " + n.name);
        return make<GlobalRefNode>(n.pos, fn->second);
      }
      case NodeKind::Binary: {
        auto lhs = expression(n.children[0]);
        auto rhs = expression(n.children[1]);
        if (is_logical(n.binary_op)) {
          return make<LogicalNode>(n.pos, n.binary_op, std::move(lhs), std::move(rhs));
        }
        return make<BinaryOpNode>(n.pos, n.binary_op, std::move(lhs), std::move(rhs), tree_);
      }
      case NodeKind::Unary:
        return make<UnaryOpNode>(n.pos, n.unary_op, expression(n.children[0]), tree_);
      case NodeKind::Call: {
        auto args = expressions(n.children);
        if (auto slot = resolve(n.name)) return make<LocalCallNode>(n.pos, *slot, std::move(args), tree_);
        return make<GlobalCallNode>(n.pos, n.name, std::move(args), tree_);
      }
      case NodeKind::MethodCall:
        return make<MethodCallNode>(n.pos, n.name, expressions(n.children), tree_);
      case NodeKind::Lambda: return lambda(n);
      case NodeKind::MakeClosure:
        return make<ClosureMakeNode>(n.pos, static_cast<std::uint32_t>(n.function_index), n.name,
                                     expressions(n.children));
      case NodeKind::TupleLit:
        return make<CollectionNode>(ast_engine::NodeKind::TupleLit, n.pos, expressions(n.children));
      case NodeKind::ListLit:
        return make<CollectionNode>(ast_engine::NodeKind::ListLit, n.pos, expressions(n.children));
      default:
        throw std::logic_error("not an expression: " + std::string(ir::to_string(n.kind)));
    }
  }

  // Executes the lambda in place: its body becomes a function whose leading
  // parameters are the captured locals, read at closure creation.
  ExprPtr lambda(const ir::Node& n) {
    const std::string name = "__lambda$" + std::to_string(lambda_numbers_.at(n.pos.offset));
    std::vector<std::string> params;
    std::vector<ExprPtr> captures;
    const FreeNames free_names(n);
    for (const auto& free : free_names.names()) {
      if (auto slot = resolve(free)) {
        params.push_back(free);
        captures.push_back(make<LocalReadNode>(n.pos, *slot));
      }
    }
    params.insert(params.end(), n.params.begin(), n.params.end());

    const auto index = static_cast<std::uint32_t>(tree_.functions.size());
    tree_.functions.emplace_back();
    tree_.program.functions.push_back({name, static_cast<std::uint32_t>(params.size()), true});
    tree_.functions[index] = build_function(index, name, n.pos, params, n.children[0]);
    return make<ClosureMakeNode>(n.pos, index, name, std::move(captures));
  }

  const ir::Module& module_;
  ExecTree& tree_;
  Context* ctx_ = nullptr;
  std::map<std::uint32_t, std::size_t> lambda_numbers_;
  std::map<std::string, Value, std::less<>> global_functions_;
};

}  // namespace

std::unique_ptr<ExecTree> build_exec_tree(const ir::Module& module, BuildOptions options) {
  auto tree = std::make_unique<ExecTree>();
  tree->options = options;
  TreeBuilder(module, *tree).run();
  return tree;
}

}  // namespace minigolo::ast_engine
