#include <map>
#include <stdexcept>

#include "minigolo/ir/passes.hpp"

namespace minigolo {

namespace {

using ir::Node;
using ir::NodeKind;

class SlotAllocator {
 public:
  explicit SlotAllocator(const ir::Function& fn) : fn_(fn) {}

  ir::Function run() {
    scopes_.emplace_back();
    for (const auto& p : fn_.params) scopes_.back()[p] = next_++;
    walk(fn_.body);
    fn_.local_slots = static_cast<std::uint32_t>(next_);
    return std::move(fn_);
  }

 private:
  std::int32_t lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto found = it->find(name); found != it->end()) return found->second;
    }
    return -1;
  }

  void resolve(Node& n) {
    n.slot = lookup(n.name);
    n.binding = n.slot >= 0 ? ir::Binding::Local : ir::Binding::Global;
  }

  void walk(Node& n) {
    switch (n.kind) {
      case NodeKind::Lambda:
        throw std::logic_error("allocate_slots requires lifted closures");
      case NodeKind::Ref:
        resolve(n);
        return;
      case NodeKind::Call:
        resolve(n);
        for (auto& c : n.children) walk(c);
        return;
      case NodeKind::Assign:
        walk(n.children[0]);
        resolve(n);
        return;
      case NodeKind::Let:
      case NodeKind::Var:
        walk(n.children[0]);
        n.slot = next_++;
        n.binding = ir::Binding::Local;
        scopes_.back()[n.name] = n.slot;
        return;
      case NodeKind::Block:
        scopes_.emplace_back();
        for (auto& c : n.children) walk(c);
        scopes_.pop_back();
        return;
      default:
        for (auto& c : n.children) walk(c);
        return;
    }
  }

  ir::Function fn_;
  std::vector<std::map<std::string, std::int32_t>> scopes_;
  std::int32_t next_ = 0;
};

}  // namespace

ir::Function allocate_slots(const ir::Function& function) { return SlotAllocator(function).run(); }

ir::Module allocate_slots(const ir::Module& module) {
  ir::Module out = module;
  for (auto& f : out.functions) f = allocate_slots(f);
  return out;
}

}  // namespace minigolo
