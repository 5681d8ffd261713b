#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "minigolo/bytecode/code_image.hpp"
#include "minigolo/dispatch/call_site.hpp"
#include "minigolo/runtime/runtime.hpp"
#include "minigolo/support/errors.hpp"

namespace minigolo::vm {

struct VmConfig {
  DispatchPolicy policy = DispatchPolicy::mono();
  std::size_t max_call_depth = 100000;
};

/// Stack machine over a CodeImage. Instructions are never rewritten: all
/// adaptation happens in the engine-local call sites.
class Vm final : public Runtime {
 public:
  Vm(const bytecode::CodeImage& image, VmConfig config, std::ostream& out);

  /// Calls `main`, passing `args` as a tuple when main declares a parameter.
  Value run_main(std::span<const Value> args = {});

  Value call_function(std::uint32_t index, std::span<const Value> args) override;
  Value call_value(const Value& callee, std::span<const Value> args) override;

  std::span<const CallSite> sites() const { return sites_; }
  const bytecode::CodeImage& image() const { return image_; }
  const VmConfig& config() const { return config_; }

 private:
  struct Frame {
    const bytecode::CompiledFunction* fn;
    std::uint32_t index;
    std::uint32_t ip;
    std::size_t base;
  };

  void ensure_capacity(std::size_t needed);
  void push_frame(std::uint32_t index, std::size_t base, std::size_t argc);
  Value run(std::size_t stop_depth);
  void unwind(RuntimeError& error, std::size_t stop_depth);
  Value invoke_detached(const TargetPtr& target, std::size_t first, std::size_t count);
  void call_closure_inline(std::size_t argc);

  const bytecode::CodeImage& image_;
  VmConfig config_;
  std::vector<CallSite> sites_;
  std::vector<Value> stack_;
  std::size_t sp_ = 0;
  std::vector<Frame> frames_;
};

/// Raises TypeMismatch unless `v` is a Bool.
bool truthiness_check(const Value& v);

struct ExecResult {
  Value value;
  std::vector<SiteStats> stats;  // indexed by site id
};

/// One-shot helper: builds a Vm, runs main, snapshots the site statistics.
ExecResult execute(const bytecode::CodeImage& image, std::span<const Value> entry_args,
                   const VmConfig& config, std::ostream& out);

}  // namespace minigolo::vm
