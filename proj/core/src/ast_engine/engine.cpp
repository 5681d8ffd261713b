#include "minigolo/ast_engine/engine.hpp"

#include <stdexcept>

#include "minigolo/runtime/targets.hpp"
#include "minigolo/support/errors.hpp"

namespace minigolo::ast_engine {

/// LIFO storage for activation slots, grown in fixed chunks so that slot
/// pointers of live frames never move.
class AstEngine::SlotArena {
 public:
  SlotArena() { chunks_.push_back(std::make_unique<Typed[]>(kChunk)); }

  Typed* push(std::size_t n) {
    if (n > kChunk) throw std::length_error("frame too large");
    Mark mark{chunk_, used_, nullptr, n};
    if (used_ + n > kChunk) {
      if (++chunk_ == chunks_.size()) chunks_.push_back(std::make_unique<Typed[]>(kChunk));
      used_ = 0;
    }
    mark.slots = chunks_[chunk_].get() + used_;
    used_ += n;
    marks_.push_back(mark);
    return mark.slots;
  }

  void pop() {
    const Mark& m = marks_.back();
    for (std::size_t i = 0; i < m.size; ++i) m.slots[i] = Typed();
    chunk_ = m.chunk;
    used_ = m.used;
    marks_.pop_back();
  }

 private:
  static constexpr std::size_t kChunk = 64 * 1024;
  struct Mark {
    std::size_t chunk;
    std::size_t used;
    Typed* slots;
    std::size_t size;
  };

  std::vector<std::unique_ptr<Typed[]>> chunks_;
  std::vector<Mark> marks_;
  std::size_t chunk_ = 0;
  std::size_t used_ = 0;
};

AstEngine::AstEngine(ExecTree& tree, AstConfig config, std::ostream& out)
    : Runtime(tree.program, out), tree_(tree), config_(config), arena_(std::make_unique<SlotArena>()) {}

AstEngine::~AstEngine() = default;

Typed AstEngine::invoke(std::uint32_t index, std::span<const Value> args) {
  check_arity(tree_.program, index, args.size());
  if (depth_ >= config_.max_call_depth) {
    throw RuntimeError(ErrorKind::StackOverflow,
                       "call depth exceeds " + std::to_string(config_.max_call_depth));
  }
  const ExecFunction& fn = *tree_.functions[index];
  Typed* slots = arena_->push(fn.local_slots);
  for (std::size_t i = 0; i < args.size(); ++i) slots[i] = Typed::of(args[i]);
  ++depth_;
  Frame frame{*this, slots, Typed(), nullptr};
  try {
    fn.body->exec(frame);
  } catch (RuntimeError& error) {
    --depth_;
    arena_->pop();
    error.add_frame(fn.name, to_string(frame.current ? frame.current->pos() : fn.pos));
    throw;
  } catch (...) {
    --depth_;
    arena_->pop();
    throw;
  }
  --depth_;
  arena_->pop();
  return frame.result;
}

Value AstEngine::call_function(std::uint32_t index, std::span<const Value> args) {
  return invoke(index, args).to_value();
}

Value AstEngine::call_value(const Value& callee, std::span<const Value> args) {
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

Value AstEngine::run_main(std::span<const Value> args) {
  const GlobalBinding* main = tree_.program.global("main");
  if (!main || main->kind != GlobalBinding::Kind::Function) {
    throw RuntimeError(ErrorKind::NoSuchMethod, "no main function");
  }
  if (tree_.functions[main->index]->params == 1) {
    const Value tuple = Value::tuple(std::vector<Value>(args.begin(), args.end()));
    return call_function(main->index, std::span<const Value>(&tuple, 1));
  }
  return call_function(main->index, {});
}

}  // namespace minigolo::ast_engine
