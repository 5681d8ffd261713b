#include <algorithm>
#include <map>
#include <set>

#include "minigolo/ir/passes.hpp"
#include "minigolo/support/errors.hpp"

namespace minigolo {

namespace {

using ir::Node;
using ir::NodeKind;

void collect_lambda_offsets(const Node& n, std::vector<std::uint32_t>& out) {
  if (n.kind == NodeKind::Lambda) out.push_back(n.pos.offset);
  for (const auto& c : n.children) collect_lambda_offsets(c, out);
}

std::size_t count_in(const Node& n) {
  std::size_t count = n.kind == NodeKind::Lambda ? 1 : 0;
  for (const auto& c : n.children) count += count_in(c);
  return count;
}

class ClosureLifter {
 public:
  explicit ClosureLifter(ir::Module module) : module_(std::move(module)) {
    std::vector<std::uint32_t> offsets;
    for (const auto& f : module_.functions) collect_lambda_offsets(f.body, offsets);
    std::sort(offsets.begin(), offsets.end());
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      lambda_numbers_[offsets[i]] = static_cast<std::uint32_t>(i);
    }
  }

  ir::Module run() {
    const std::size_t original = module_.functions.size();
    for (std::size_t i = 0; i < original; ++i) {
      scopes_.clear();
      scopes_.emplace_back(module_.functions[i].params.begin(), module_.functions[i].params.end());
      // Walk a detached body so synthetic functions can be appended safely.
      Node body = std::move(module_.functions[i].body);
      walk(body);
      module_.functions[i].body = std::move(body);
    }
    for (auto& pending : lifted_) module_.functions.push_back(std::move(pending));
    // MakeClosure nodes reference synthetic functions by name; resolve indices now.
    std::map<std::string, std::int32_t> index_of;
    for (std::size_t i = 0; i < module_.functions.size(); ++i) {
      if (module_.functions[i].synthetic) {
        index_of[module_.functions[i].name] = static_cast<std::int32_t>(i);
      }
    }
    for (auto& f : module_.functions) assign_indices(f.body, index_of);
    return std::move(module_);
  }

 private:
  struct LambdaContext {
    std::size_t boundary;  // scopes at index >= boundary belong to the lambda
    std::vector<std::string> captures;
  };

  // Index of the innermost scope binding `name`, or -1 for globals.
  std::ptrdiff_t scope_index(const std::string& name) const {
    for (std::size_t i = scopes_.size(); i-- > 0;) {
      if (scopes_[i].contains(name)) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  }

  void note_use(const std::string& name, SourcePos pos, bool assignment) {
    if (contexts_.empty()) return;
    const std::ptrdiff_t index = scope_index(name);
    if (index < 0) return;
    auto& ctx = contexts_.back();
    if (static_cast<std::size_t>(index) >= ctx.boundary) return;
    if (assignment) throw CompileError(pos, "assignment to captured variable: " + name);
    if (std::find(ctx.captures.begin(), ctx.captures.end(), name) == ctx.captures.end()) {
      ctx.captures.push_back(name);
    }
  }

  void walk(Node& n) {
    switch (n.kind) {
      case NodeKind::Ref:
        note_use(n.name, n.pos, false);
        return;
      case NodeKind::Call:
        note_use(n.name, n.pos, false);
        for (auto& c : n.children) walk(c);
        return;
      case NodeKind::Assign:
        walk(n.children[0]);
        note_use(n.name, n.pos, true);
        return;
      case NodeKind::Let:
      case NodeKind::Var:
        walk(n.children[0]);
        scopes_.back().insert(n.name);
        return;
      case NodeKind::Block:
        scopes_.emplace_back();
        for (auto& c : n.children) walk(c);
        scopes_.pop_back();
        return;
      case NodeKind::Lambda:
        lift(n);
        return;
      default:
        for (auto& c : n.children) walk(c);
        return;
    }
  }

  void lift(Node& lambda) {
    contexts_.push_back({scopes_.size(), {}});
    scopes_.emplace_back(lambda.params.begin(), lambda.params.end());
    walk(lambda.children[0]);
    scopes_.pop_back();
    LambdaContext ctx = std::move(contexts_.back());
    contexts_.pop_back();

    ir::Function fn;
    fn.pos = lambda.pos;
    fn.name = "__lambda$" + std::to_string(lambda_numbers_.at(lambda.pos.offset));
    fn.synthetic = true;
    fn.capture_count = static_cast<std::uint32_t>(ctx.captures.size());
    fn.params = ctx.captures;
    fn.params.insert(fn.params.end(), lambda.params.begin(), lambda.params.end());
    fn.body = std::move(lambda.children[0]);

    Node closure;
    closure.kind = NodeKind::MakeClosure;
    closure.pos = lambda.pos;
    closure.name = fn.name;
    for (const auto& captured : ctx.captures) {
      Node ref;
      ref.kind = NodeKind::Ref;
      ref.pos = lambda.pos;
      ref.name = captured;
      closure.children.push_back(std::move(ref));
    }
    lifted_.push_back(std::move(fn));
    lambda = std::move(closure);
    // The captured values are read in the enclosing context, which may itself be a lambda.
    for (auto& c : lambda.children) walk(c);
  }

  static void assign_indices(Node& n, const std::map<std::string, std::int32_t>& index_of) {
    if (n.kind == NodeKind::MakeClosure) n.function_index = index_of.at(n.name);
    for (auto& c : n.children) assign_indices(c, index_of);
  }

  ir::Module module_;
  std::map<std::uint32_t, std::uint32_t> lambda_numbers_;
  std::vector<std::set<std::string>> scopes_;
  std::vector<LambdaContext> contexts_;
  std::vector<ir::Function> lifted_;
};

}  // namespace

ir::Module lift_closures(const ir::Module& module) { return ClosureLifter(module).run(); }

std::size_t count_lambdas(const ir::Module& module) {
  std::size_t count = 0;
  for (const auto& f : module.functions) count += count_in(f.body);
  return count;
}

}  // namespace minigolo
