#include "minigolo/dispatch/call_site.hpp"

#include <algorithm>
#include <cassert>

#include "minigolo/runtime/runtime.hpp"

namespace minigolo {

namespace {

const HandlePtr& fallback() {
  static const HandlePtr handle = std::make_shared<FallbackHandle>();
  return handle;
}

}  // namespace

CallSite::CallSite(std::uint32_t id, SiteKind kind, std::string name, std::uint32_t arity,
                   DispatchPolicy policy)
    : id_(id), kind_(kind), name_(std::move(name)), arity_(arity), policy_(policy), chain_(fallback()) {}

CallSite CallSite::binary_operator(std::uint32_t id, BinaryOp op, DispatchPolicy policy) {
  CallSite site(id, SiteKind::Operator, std::string(operator_name(op)), 2, policy);
  site.binary_op_ = op;
  return site;
}

CallSite CallSite::unary_operator(std::uint32_t id, UnaryOp op, DispatchPolicy policy) {
  CallSite site(id, SiteKind::Operator, std::string(operator_name(op)), 1, policy);
  site.unary_op_ = op;
  site.unary_ = true;
  return site;
}

CallSite CallSite::function(std::uint32_t id, std::string name, std::uint32_t argc,
                            DispatchPolicy policy) {
  return CallSite(id, SiteKind::Function, std::move(name), argc, policy);
}

CallSite CallSite::method(std::uint32_t id, std::string name, std::uint32_t argc,
                          DispatchPolicy policy) {
  return CallSite(id, SiteKind::Method, std::move(name), argc + 1, policy);
}

Discriminator CallSite::discriminator(std::span<const Value> args) const {
  switch (kind_) {
    case SiteKind::Operator:
      if (unary_) return Discriminator::of(GuardKey::of_kind(args[0].kind()));
      return Discriminator::kinds(args[0].kind(), args[1].kind());
    case SiteKind::Method: return Discriminator::of(receiver_key(args[0]));
    case SiteKind::Function: break;
  }
  return Discriminator::of(GuardKey::of_callee(0));
}

Linkage CallSite::lookup(std::span<const Value> args, Runtime& rt) const {
  switch (kind_) {
    case SiteKind::Operator:
      if (unary_) return link_unary_operator(unary_op_, args[0]);
      return link_operator(binary_op_, args[0], args[1]);
    case SiteKind::Method: return method_lookup(rt, args[0], name_, args.size() - 1);
    case SiteKind::Function: break;
  }
  return link_function(rt.program(), name_);
}

void CallSite::relink(const Linkage& linkage) {
  switch (policy_.kind) {
    case DispatchPolicy::Kind::None: return;
    case DispatchPolicy::Kind::Mono:
      chain_ = std::make_shared<GuardedHandle>(linkage.guard, linkage.target, fallback());
      ++relinks_;
      return;
    case DispatchPolicy::Kind::Poly:
      if (megamorphic_) return;
      if (chain_->depth() < policy_.k) {
        chain_ = std::make_shared<GuardedHandle>(linkage.guard, linkage.target, chain_);
        ++relinks_;
      } else {
        // Permanently megamorphic: every later call goes through lookup.
        megamorphic_ = true;
        chain_ = fallback();
      }
      return;
  }
}

const TargetPtr& CallSite::resolve(std::span<const Value> args, Runtime& rt) {
  const Discriminator d = discriminator(args);
  if (const TargetPtr* hit = chain_->select(d)) {
    ++hits_;
    return *hit;
  }
  ++misses_;
  Linkage linkage = lookup(args, rt);
  assert(linkage.guard == d);
  relink(linkage);
  unlinked_ = std::move(linkage.target);
  return unlinked_;
}

Value CallSite::invoke(std::span<const Value> args, Runtime& rt) {
  // Keep the target alive: a re-entrant call may relink this site.
  const TargetPtr target = resolve(args, rt);
  return target->invoke(args, rt);
}

SiteStats CallSite::stats() const {
  return {hits_, misses_, relinks_, chain_->depth(), megamorphic_};
}

std::string_view to_string(CallSite::SiteKind kind) {
  switch (kind) {
    case CallSite::SiteKind::Operator: return "operator";
    case CallSite::SiteKind::Function: return "function";
    case CallSite::SiteKind::Method: return "method";
  }
  return "?";
}

void dump_site_stats(std::ostream& out, std::span<const CallSite> sites) {
  std::vector<const CallSite*> executed;
  for (const auto& site : sites) {
    if (site.stats().invocations() > 0) executed.push_back(&site);
  }
  std::sort(executed.begin(), executed.end(),
            [](const CallSite* a, const CallSite* b) { return a->id() < b->id(); });
  for (const CallSite* site : executed) {
    const SiteStats s = site->stats();
    out << "site=" << site->id() << " kind=" << to_string(site->kind()) << " name=" << site->name()
        << " hits=" << s.hits << " misses=" << s.misses << " relinks=" << s.relinks
        << " depth=" << s.depth << " mega=" << (s.megamorphic ? "true" : "false") << '\n';
  }
}

}  // namespace minigolo
