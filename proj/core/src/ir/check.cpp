#include <map>
#include <set>

#include "minigolo/ir/globals.hpp"
#include "minigolo/ir/passes.hpp"
#include "minigolo/runtime/value.hpp"

namespace minigolo {

namespace {

using ir::Node;
using ir::NodeKind;

class ReferenceChecker {
 public:
  explicit ReferenceChecker(const ir::Module& module) : module_(module), globals_(module) {}

  std::vector<Diagnostic> run() {
    check_declarations();
    for (const auto& f : module_.functions) check_function(f);
    return std::move(diags_);
  }

 private:
  struct Local {
    bool mutable_binding;
  };
  using Scope = std::map<std::string, Local, std::less<>>;

  void report(SourcePos pos, std::string message) {
    diags_.push_back({Diagnostic::Severity::Error, std::move(message), pos});
  }

  void check_declarations() {
    std::set<std::string, std::less<>> seen;
    for (const auto& s : module_.structures) {
      if (!seen.insert(s.name).second) report(s.pos, "duplicate declaration: " + s.name);
      std::set<std::string, std::less<>> fields;
      for (const auto& field : s.fields) {
        if (!fields.insert(field).second) report(s.pos, "duplicate field: " + field);
      }
    }
    for (const auto& f : module_.functions) {
      if (!f.augment_target.empty() || f.synthetic) continue;
      if (!seen.insert(f.name).second) report(f.pos, "duplicate declaration: " + f.name);
    }
    for (const auto& aug : module_.augmentations) {
      Kind kind;
      bool is_structure = false;
      for (const auto& s : module_.structures) is_structure = is_structure || s.name == aug.target;
      if (!is_structure && !kind_from_name(aug.target, kind)) {
        report(aug.pos, "undeclared type: " + aug.target);
      }
      for (auto index : aug.functions) {
        const auto& f = module_.functions[index];
        if (f.params.empty()) {
          report(f.pos, "augmentation requires a receiver parameter: " + f.name);
        }
      }
    }
  }

  void check_function(const ir::Function& f) {
    scopes_.clear();
    scopes_.emplace_back();
    declare_params(f.params, f.param_pos, f.pos);
    walk(f.body);
  }

  void declare_params(const std::vector<std::string>& params,
                      const std::vector<SourcePos>& positions, SourcePos fallback) {
    for (std::size_t i = 0; i < params.size(); ++i) {
      const SourcePos pos = i < positions.size() ? positions[i] : fallback;
      if (!scopes_.back().emplace(params[i], Local{false}).second) {
        report(pos, "duplicate parameter: " + params[i]);
      }
    }
  }

  const Local* find_local(std::string_view name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto found = it->find(name); found != it->end()) return &found->second;
    }
    return nullptr;
  }

  void check_name(const Node& n, bool called) {
    if (find_local(n.name)) return;
    switch (globals_.classify(n.name)) {
      case ModuleGlobals::Category::Function:
        return;
      case ModuleGlobals::Category::Structure:
        if (!called) report(n.pos, "structure cannot be used as a value: " + n.name);
        return;
      case ModuleGlobals::Category::Import:
      case ModuleGlobals::Category::Builtin:
        if (!called) report(n.pos, "native function cannot be used as a value: " + n.name);
        return;
      case ModuleGlobals::Category::Ambiguous:
        report(n.pos, "ambiguous reference: " + n.name);
        return;
      case ModuleGlobals::Category::None:
        report(n.pos, "undeclared reference: " + n.name);
        return;
    }
  }

  void declare(const Node& n, bool mutable_binding) {
    if (!scopes_.back().emplace(n.name, Local{mutable_binding}).second) {
      report(n.pos, "duplicate declaration: " + n.name);
    }
  }

  void walk(const Node& n) {
    switch (n.kind) {
      case NodeKind::Ref:
        check_name(n, false);
        return;
      case NodeKind::Call:
        check_name(n, true);
        for (const auto& c : n.children) walk(c);
        return;
      case NodeKind::Assign: {
        walk(n.children[0]);
        const Local* local = find_local(n.name);
        if (!local) {
          report(n.pos, "undeclared reference: " + n.name);
        } else if (!local->mutable_binding) {
          report(n.pos, "assignment to immutable binding: " + n.name);
        }
        return;
      }
      case NodeKind::Let:
      case NodeKind::Var:
        walk(n.children[0]);
        declare(n, n.kind == NodeKind::Var);
        return;
      case NodeKind::Block:
        scopes_.emplace_back();
        for (const auto& c : n.children) walk(c);
        scopes_.pop_back();
        return;
      case NodeKind::Lambda:
        scopes_.emplace_back();
        declare_params(n.params, {}, n.pos);
        walk(n.children[0]);
        scopes_.pop_back();
        return;
      case NodeKind::MakeClosure:
        for (const auto& c : n.children) walk(c);
        return;
      default:
        for (const auto& c : n.children) walk(c);
        return;
    }
  }

  const ir::Module& module_;
  ModuleGlobals globals_;
  std::vector<Scope> scopes_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> check_references(const ir::Module& module) {
  return ReferenceChecker(module).run();
}

}  // namespace minigolo
