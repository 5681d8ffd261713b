#include "minigolo/vm/vm.hpp"

#include <algorithm>
#include <array>

namespace minigolo::vm {

using bytecode::Opcode;

namespace {

/// Argument copy that keeps small counts off the heap. Natives may re-enter
/// the VM, which can grow (and move) the value stack under a live span.
class ArgBuffer {
 public:
  ArgBuffer(const Value* first, std::size_t count) : count_(count) {
    if (count <= inline_.size()) {
      std::copy(first, first + count, inline_.begin());
    } else {
      heap_.assign(first, first + count);
    }
  }
  std::span<const Value> view() const {
    return count_ <= inline_.size() ? std::span<const Value>(inline_.data(), count_)
                                     : std::span<const Value>(heap_);
  }

 private:
  std::array<Value, 4> inline_;
  std::vector<Value> heap_;
  std::size_t count_;
};

}  // namespace

bool truthiness_check(const Value& v) {
  if (!v.is(Kind::Bool)) {
    throw RuntimeError(ErrorKind::TypeMismatch,
                       "branch condition requires Bool, got " + std::string(kind_name(v.kind())));
  }
  return v.as_bool();
}

Vm::Vm(const bytecode::CodeImage& image, VmConfig config, std::ostream& out)
    : Runtime(image.program, out), image_(image), config_(config) {
  sites_.reserve(image.sites.size());
  for (std::size_t i = 0; i < image.sites.size(); ++i) {
    const auto& info = image.sites[i];
    const auto id = static_cast<std::uint32_t>(i);
    switch (info.kind) {
      case bytecode::SiteInfo::Kind::BinaryOperator:
        sites_.push_back(CallSite::binary_operator(id, info.binary_op, config.policy));
        break;
      case bytecode::SiteInfo::Kind::UnaryOperator:
        sites_.push_back(CallSite::unary_operator(id, info.unary_op, config.policy));
        break;
      case bytecode::SiteInfo::Kind::Function:
        sites_.push_back(CallSite::function(id, info.name, info.argc, config.policy));
        break;
      case bytecode::SiteInfo::Kind::Method:
        sites_.push_back(CallSite::method(id, info.name, info.argc, config.policy));
        break;
    }
  }
  stack_.resize(1024);
  frames_.reserve(256);
}

void Vm::ensure_capacity(std::size_t needed) {
  if (needed > stack_.size()) stack_.resize(std::max(needed, stack_.size() * 2));
}

void Vm::push_frame(std::uint32_t index, std::size_t base, std::size_t argc) {
  const auto& fn = image_.functions[index];
  if (argc != fn.params) check_arity(program(), index, argc);
  if (frames_.size() >= config_.max_call_depth) {
    throw RuntimeError(ErrorKind::StackOverflow,
                       "call depth exceeds " + std::to_string(config_.max_call_depth));
  }
  ensure_capacity(base + fn.local_slots + fn.max_stack + 1);
  for (std::size_t i = base + argc; i < base + fn.local_slots; ++i) stack_[i] = Value();
  sp_ = base + fn.local_slots;
  frames_.push_back({&fn, index, 0, base});
}

void Vm::unwind(RuntimeError& error, std::size_t stop_depth) {
  while (frames_.size() > stop_depth) {
    const Frame& f = frames_.back();
    error.add_frame(f.fn->name, "instr " + std::to_string(f.ip == 0 ? 0 : f.ip - 1));
    sp_ = f.base;
    frames_.pop_back();
  }
}

Value Vm::invoke_detached(const TargetPtr& target, std::size_t first, std::size_t count) {
  const TargetPtr keep = target;
  const ArgBuffer args(stack_.data() + first, count);
  return keep->invoke(args.view(), *this);
}

void Vm::call_closure_inline(std::size_t argc) {
  const std::size_t callee_pos = sp_ - argc - 1;
  const Value callee = stack_[callee_pos];
  if (callee.is(Kind::FunctionRef)) {
    std::move(stack_.begin() + callee_pos + 1, stack_.begin() + sp_, stack_.begin() + callee_pos);
    --sp_;
    push_frame(callee.as_function().index, callee_pos, argc);
    return;
  }
  if (!callee.is(Kind::Closure)) {
    throw RuntimeError(ErrorKind::TypeMismatch,
                       "cannot call a value of kind " + std::string(kind_name(callee.kind())));
  }
  const auto& closure = callee.as_closure();
  const std::size_t capc = closure.captures.size();
  ensure_capacity(sp_ + capc);
  auto begin = stack_.begin() + callee_pos + 1;
  if (capc == 0) {
    std::move(begin, begin + argc, begin - 1);
  } else {
    std::move_backward(begin, begin + argc, begin + argc + capc - 1);
  }
  std::copy(closure.captures.begin(), closure.captures.end(), stack_.begin() + callee_pos);
  sp_ = callee_pos + capc + argc;
  push_frame(closure.index, callee_pos, capc + argc);
}

Value Vm::run(std::size_t stop_depth) {
  try {
    for (;;) {
      Frame& frame = frames_.back();
      const bytecode::Instruction ins = frame.fn->code[frame.ip++];
      switch (ins.op) {
        case Opcode::LoadConst:
          stack_[sp_++] = image_.constants[ins.a];
          break;
        case Opcode::LoadLocal:
          stack_[sp_] = stack_[frame.base + ins.a];
          ++sp_;
          break;
        case Opcode::StoreLocal:
          stack_[frame.base + ins.a] = std::move(stack_[--sp_]);
          break;
        case Opcode::Pop:
          stack_[--sp_] = Value();
          break;
        case Opcode::Dup:
          stack_[sp_] = stack_[sp_ - 1];
          ++sp_;
          break;
        case Opcode::Jump:
          frame.ip = static_cast<std::uint32_t>(ins.a);
          break;
        case Opcode::JumpIfFalse:
          if (!truthiness_check(stack_[--sp_])) frame.ip = static_cast<std::uint32_t>(ins.a);
          break;
        case Opcode::Return:
        case Opcode::ReturnNull: {
          Value result = ins.op == Opcode::Return ? std::move(stack_[sp_ - 1]) : Value();
          sp_ = frame.base;
          frames_.pop_back();
          if (frames_.size() == stop_depth) return result;
          stack_[sp_++] = std::move(result);
          break;
        }
        case Opcode::CallFunction:
        case Opcode::CallMethod: {
          const std::size_t count = ins.op == Opcode::CallMethod ? ins.b + 1 : ins.b;
          const std::size_t first = sp_ - count;
          const TargetPtr& target =
              sites_[ins.a].resolve(std::span<const Value>(stack_.data() + first, count), *this);
          if (auto index = target->user_function()) {
            push_frame(*index, first, count);
          } else {
            Value result = invoke_detached(target, first, count);
            sp_ = first;
            stack_[sp_++] = std::move(result);
          }
          break;
        }
        case Opcode::CallOperator: {
          CallSite& site = sites_[ins.a];
          const std::size_t first = sp_ - site.arity();
          const std::span<const Value> args(stack_.data() + first, site.arity());
          // Operator targets never re-enter the VM, so the chain entry stays valid.
          Value result = site.resolve(args, *this)->invoke(args, *this);
          stack_[first] = std::move(result);
          sp_ = first + 1;
          break;
        }
        case Opcode::CallClosure:
          call_closure_inline(static_cast<std::size_t>(ins.a));
          break;
        case Opcode::MakeClosure: {
          const std::size_t first = sp_ - ins.b;
          std::vector<Value> captures(stack_.begin() + first, stack_.begin() + sp_);
          const auto index = static_cast<std::uint32_t>(ins.a);
          sp_ = first;
          stack_[sp_++] = Value::closure(index, image_.functions[index].name, std::move(captures));
          break;
        }
        case Opcode::MakeTuple:
        case Opcode::MakeList: {
          const std::size_t first = sp_ - ins.a;
          std::vector<Value> items(stack_.begin() + first, stack_.begin() + sp_);
          sp_ = first;
          stack_[sp_++] = ins.op == Opcode::MakeTuple ? Value::tuple(std::move(items))
                                                      : Value::list(std::move(items));
          break;
        }
      }
    }
  } catch (RuntimeError& error) {
    unwind(error, stop_depth);
    throw;
  }
}

Value Vm::call_function(std::uint32_t index, std::span<const Value> args) {
  const std::size_t stop = frames_.size();
  const std::size_t base = sp_;
  ensure_capacity(base + args.size());
  std::copy(args.begin(), args.end(), stack_.begin() + base);
  sp_ = base + args.size();
  try {
    push_frame(index, base, args.size());
  } catch (...) {
    sp_ = base;
    throw;
  }
  return run(stop);
}

Value Vm::call_value(const Value& callee, std::span<const Value> args) {
  if (callee.is(Kind::FunctionRef)) return call_function(callee.as_function().index, args);
  if (callee.is(Kind::Closure)) {
    const auto& closure = callee.as_closure();
    if (closure.captures.empty()) return call_function(closure.index, args);
    std::vector<Value> full(closure.captures);
    full.insert(full.end(), args.begin(), args.end());
    return call_function(closure.index, full);
  }
  throw RuntimeError(ErrorKind::TypeMismatch,
                     "cannot call a value of kind " + std::string(kind_name(callee.kind())));
}

Value Vm::run_main(std::span<const Value> args) {
  if (image_.entry < 0) throw RuntimeError(ErrorKind::NoSuchMethod, "no main function");
  const auto index = static_cast<std::uint32_t>(image_.entry);
  if (image_.functions[index].params == 1) {
    const Value tuple = Value::tuple(std::vector<Value>(args.begin(), args.end()));
    return call_function(index, std::span<const Value>(&tuple, 1));
  }
  return call_function(index, {});
}

ExecResult execute(const bytecode::CodeImage& image, std::span<const Value> entry_args,
                   const VmConfig& config, std::ostream& out) {
  Vm vm(image, config, out);
  ExecResult result;
  result.value = vm.run_main(entry_args);
  for (const auto& site : vm.sites()) result.stats.push_back(site.stats());
  return result;
}

}  // namespace minigolo::vm
