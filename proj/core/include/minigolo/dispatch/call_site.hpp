#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "minigolo/dispatch/policy.hpp"
#include "minigolo/runtime/targets.hpp"

namespace minigolo {

/// A node of a call site's dispatch chain.
class Handle {
 public:
  virtual ~Handle() = default;
  /// The target reached for `d`, or null when the walk ends in the fallback.
  virtual const TargetPtr* select(const Discriminator& d) const = 0;
  virtual std::size_t depth() const = 0;
};

using HandlePtr = std::shared_ptr<const Handle>;

/// Dispatches to `target` when the arguments match `guard`, otherwise to `next`.
class GuardedHandle final : public Handle {
 public:
  GuardedHandle(Discriminator guard, TargetPtr target, HandlePtr next)
      : guard_(guard), target_(std::move(target)), next_(std::move(next)) {}

  const TargetPtr* select(const Discriminator& d) const override {
    if (d == guard_) return &target_;
    return next_->select(d);
  }
  std::size_t depth() const override { return 1 + next_->depth(); }

  const Discriminator& guard() const { return guard_; }
  const TargetPtr& target() const { return target_; }
  const HandlePtr& next() const { return next_; }

 private:
  Discriminator guard_;
  TargetPtr target_;
  HandlePtr next_;
};

/// Chain terminator: signals the owning site to run its lookup and relink.
class FallbackHandle final : public Handle {
 public:
  const TargetPtr* select(const Discriminator&) const override { return nullptr; }
  std::size_t depth() const override { return 0; }
};

struct SiteStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t relinks = 0;
  std::size_t depth = 0;
  bool megamorphic = false;

  std::uint64_t invocations() const { return hits + misses; }
};

class CallSite {
 public:
  enum class SiteKind : std::uint8_t { Operator, Function, Method };

  static CallSite binary_operator(std::uint32_t id, BinaryOp op, DispatchPolicy policy);
  static CallSite unary_operator(std::uint32_t id, UnaryOp op, DispatchPolicy policy);
  static CallSite function(std::uint32_t id, std::string name, std::uint32_t argc, DispatchPolicy policy);
  /// `argc` excludes the receiver.
  static CallSite method(std::uint32_t id, std::string name, std::uint32_t argc, DispatchPolicy policy);

  /// Finds the target for `args` (receiver first for method sites), running
  /// the fallback lookup and relinking on a miss. The reference stays valid
  /// until the next resolve() on this site.
  const TargetPtr& resolve(std::span<const Value> args, Runtime& rt);

  /// resolve() then invoke.
  Value invoke(std::span<const Value> args, Runtime& rt);

  Discriminator discriminator(std::span<const Value> args) const;

  std::uint32_t id() const { return id_; }
  SiteKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// Number of values the site passes, receiver included.
  std::uint32_t arity() const { return arity_; }
  const DispatchPolicy& policy() const { return policy_; }
  const HandlePtr& chain() const { return chain_; }

  SiteStats stats() const;

 private:
  CallSite(std::uint32_t id, SiteKind kind, std::string name, std::uint32_t arity, DispatchPolicy policy);

  Linkage lookup(std::span<const Value> args, Runtime& rt) const;
  void relink(const Linkage& linkage);

  std::uint32_t id_;
  SiteKind kind_;
  std::string name_;
  std::uint32_t arity_;
  BinaryOp binary_op_ = BinaryOp::Plus;
  UnaryOp unary_op_ = UnaryOp::Neg;
  bool unary_ = false;
  DispatchPolicy policy_;
  HandlePtr chain_;
  TargetPtr unlinked_;  // target of the last call that was not installed
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
  std::uint64_t relinks_ = 0;
  bool megamorphic_ = false;
};

std::string_view to_string(CallSite::SiteKind kind);

/// One line per executed site, sorted by id:
/// `site=<id> kind=<k> name=<n> hits=<h> misses=<m> relinks=<r> depth=<d> mega=<bool>`.
void dump_site_stats(std::ostream& out, std::span<const CallSite> sites);

}  // namespace minigolo
