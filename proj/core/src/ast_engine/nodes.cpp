#include "nodes.hpp"

#include <array>
#include <type_traits>

#include "minigolo/runtime/numeric.hpp"
#include "minigolo/runtime/operators.hpp"
#include "minigolo/support/errors.hpp"

namespace minigolo::ast_engine {

namespace {

bool condition(const Typed& t) {
  if (t.kind != Kind::Bool) {
    throw RuntimeError(ErrorKind::TypeMismatch,
                       "branch condition requires Bool, got " + std::string(kind_name(t.kind)));
  }
  return t.as_bool();
}

template <Kind L, Kind R>
using promoted_t = std::conditional_t<
    L == Kind::Double || R == Kind::Double, double,
    std::conditional_t<L == Kind::Long || R == Kind::Long, std::int64_t, std::int32_t>>;

template <Kind K>
auto read(const Typed& t) {
  if constexpr (K == Kind::Int) {
    return t.as_int();
  } else if constexpr (K == Kind::Long) {
    return t.as_long();
  } else {
    return t.as_double();
  }
}

template <class T>
Typed make_typed(T v) {
  if constexpr (std::is_same_v<T, std::int32_t>) {
    return Typed::of_int(v);
  } else if constexpr (std::is_same_v<T, std::int64_t>) {
    return Typed::of_long(v);
  } else {
    return Typed::of_double(v);
  }
}

// Kind-specialized operator bodies: machine arithmetic, no boxing.
template <BinaryOp Op, Kind L, Kind R>
Typed prim_op(const Typed& a, const Typed& b) {
  using T = promoted_t<L, R>;
  auto r = numeric::apply<Op, T>(static_cast<T>(read<L>(a)), static_cast<T>(read<R>(b)));
  if constexpr (std::is_same_v<decltype(r), bool>) {
    return Typed::of_bool(r);
  } else {
    return make_typed<T>(r);
  }
}

template <BinaryOp Op, Kind L>
PrimOp select_right(Kind r) {
  switch (r) {
    case Kind::Int: return &prim_op<Op, L, Kind::Int>;
    case Kind::Long: return &prim_op<Op, L, Kind::Long>;
    default: return &prim_op<Op, L, Kind::Double>;
  }
}

template <BinaryOp Op>
PrimOp select_kinds(Kind l, Kind r) {
  switch (l) {
    case Kind::Int: return select_right<Op, Kind::Int>(r);
    case Kind::Long: return select_right<Op, Kind::Long>(r);
    default: return select_right<Op, Kind::Double>(r);
  }
}

PrimOp select_prim_op(BinaryOp op, Kind l, Kind r) {
  switch (op) {
    case BinaryOp::Plus: return select_kinds<BinaryOp::Plus>(l, r);
    case BinaryOp::Minus: return select_kinds<BinaryOp::Minus>(l, r);
    case BinaryOp::Times: return select_kinds<BinaryOp::Times>(l, r);
    case BinaryOp::Divide: return select_kinds<BinaryOp::Divide>(l, r);
    case BinaryOp::Modulo: return select_kinds<BinaryOp::Modulo>(l, r);
    case BinaryOp::Equals: return select_kinds<BinaryOp::Equals>(l, r);
    case BinaryOp::NotEquals: return select_kinds<BinaryOp::NotEquals>(l, r);
    case BinaryOp::Less: return select_kinds<BinaryOp::Less>(l, r);
    case BinaryOp::LessOrEquals: return select_kinds<BinaryOp::LessOrEquals>(l, r);
    case BinaryOp::More: return select_kinds<BinaryOp::More>(l, r);
    case BinaryOp::MoreOrEquals: return select_kinds<BinaryOp::MoreOrEquals>(l, r);
    default: return nullptr;
  }
}

Typed concat(const Typed& a, const Typed& b) {
  std::string text = a.value.as_str();
  render_typed(text, b);
  return Typed::of(Value::str(std::move(text)));
}

/// Argument values for a call, inline for small counts.
class ArgValues {
 public:
  explicit ArgValues(std::size_t n) : n_(n) {
    if (n > inline_.size()) {
      heap_.resize(n);
      data_ = heap_.data();
    } else {
      data_ = inline_.data();
    }
  }
  ArgValues(const ArgValues&) = delete;
  ArgValues& operator=(const ArgValues&) = delete;

  Value& operator[](std::size_t i) { return data_[i]; }
  std::span<const Value> view() const { return {data_, n_}; }

 private:
  std::array<Value, 4> inline_;
  std::vector<Value> heap_;
  Value* data_;
  std::size_t n_;
};

void evaluate_args(Frame& frame, const std::vector<ExprPtr>& exprs, ArgValues& out) {
  for (std::size_t i = 0; i < exprs.size(); ++i) out[i] = exprs[i]->eval(frame).to_value();
}

DispatchCache::Entry entry_of(Linkage linkage) {
  auto user = linkage.target->user_function();
  return {linkage.guard, std::move(linkage.target), user};
}

Typed call_target(const DispatchCache::Entry& entry, const ArgValues& args, AstEngine& engine) {
  if (entry.user_function) return engine.invoke(*entry.user_function, args.view());
  // The entry may be replaced by a re-entrant miss; keep the target alive.
  const TargetPtr target = entry.target;
  return Typed::of(target->invoke(args.view(), engine));
}

}  // namespace

Flow LocalWriteNode::exec(Frame& frame) {
  ++count_;
  Typed t = value_->eval(frame);
  if (state_.level() != SpecState::Level::Generic) {
    if (!state_.matches(t.kind)) tree_.transition(state_, observe_store(state_, t.kind));
    if (state_.level() == SpecState::Level::Specialized) {
      frame.slots[slot_] = t.boxed ? Typed::unboxed(t.value) : std::move(t);
      return Flow::Normal;
    }
  }
  frame.slots[slot_] = Typed::of(t.to_value());
  return Flow::Normal;
}

Flow BranchNode::exec(Frame& frame) {
  ++count_;
  if (condition(cond_->eval(frame))) return then_->exec(frame);
  if (else_) return else_->exec(frame);
  return Flow::Normal;
}

Flow LoopNode::exec(Frame& frame) {
  ++count_;
  while (condition(cond_->eval(frame))) {
    if (body_->exec(frame) == Flow::Return) return Flow::Return;
  }
  return Flow::Normal;
}

Typed BinaryOpNode::eval(Frame& frame) {
  ++count_;
  const Typed a = lhs_->eval(frame);
  const Typed b = rhs_->eval(frame);
  if (fast_ != nullptr && state_.matches(a.kind, b.kind)) return fast_(a, b);
  return rewrite(a, b);
}

// Slow path: (re)specialize on the observed kinds, then compute this
// evaluation's result with the new state.
Typed BinaryOpNode::rewrite(const Typed& a, const Typed& b) {
  if (state_.level() != SpecState::Level::Generic) {
    tree_.transition(state_, observe_binary(state_, op_, a.kind, b.kind));
    if (state_.level() == SpecState::Level::Specialized) {
      fast_ = state_.any_right() ? &concat : select_prim_op(op_, a.kind, b.kind);
      return fast_(a, b);
    }
    fast_ = nullptr;
  }
  return Typed::of(apply_operator(op_, a.to_value(), b.to_value()));
}

Typed UnaryOpNode::eval(Frame& frame) {
  ++count_;
  const Typed a = operand_->eval(frame);
  if (state_.level() != SpecState::Level::Generic) {
    if (!state_.matches(a.kind)) tree_.transition(state_, observe_unary(state_, op_, a.kind));
    if (state_.level() == SpecState::Level::Specialized) {
      if (op_ == UnaryOp::Not) return Typed::of_bool(!a.as_bool());
      switch (a.kind) {
        case Kind::Int: return Typed::of_int(numeric::neg(a.as_int()));
        case Kind::Long: return Typed::of_long(numeric::neg(a.as_long()));
        default: return Typed::of_double(-a.as_double());
      }
    }
  }
  return Typed::of(apply_unary(op_, a.to_value()));
}

Typed LogicalNode::eval(Frame& frame) {
  ++count_;
  const bool left = condition(lhs_->eval(frame));
  if (op_ == BinaryOp::And && !left) return Typed::of_bool(false);
  if (op_ == BinaryOp::Or && left) return Typed::of_bool(true);
  return Typed::of_bool(condition(rhs_->eval(frame)));
}

Typed GlobalCallNode::eval(Frame& frame) {
  ++count_;
  ArgValues args(args_.size());
  evaluate_args(frame, args_, args);
  AstEngine& engine = frame.engine;
  const auto& entry = cache_.dispatch(Discriminator::of(GuardKey::of_callee(0)), [&] {
    return entry_of(link_function(engine.program(), name_));
  });
  return call_target(entry, args, engine);
}

Typed LocalCallNode::eval(Frame& frame) {
  ++count_;
  ArgValues args(args_.size());
  evaluate_args(frame, args_, args);
  const Value callee = frame.slots[slot_].to_value();
  if (!callee.is_callable()) {
    throw RuntimeError(ErrorKind::TypeMismatch,
                       "cannot call a value of kind " + std::string(kind_name(callee.kind())));
  }
  const bool closure = callee.is(Kind::Closure);
  const std::uint32_t index = closure ? callee.as_closure().index : callee.as_function().index;
  const auto key = Discriminator::of(GuardKey::of_callee(index * 2 + (closure ? 1 : 0)));
  const auto& entry = cache_.dispatch(key, [&] { return DispatchCache::Entry{key, nullptr, index}; });
  const std::uint32_t target = *entry.user_function;
  if (closure && !callee.as_closure().captures.empty()) {
    std::vector<Value> full(callee.as_closure().captures);
    full.insert(full.end(), args.view().begin(), args.view().end());
    return frame.engine.invoke(target, full);
  }
  return frame.engine.invoke(target, args.view());
}

Typed MethodCallNode::eval(Frame& frame) {
  ++count_;
  ArgValues args(args_.size());
  evaluate_args(frame, args_, args);
  AstEngine& engine = frame.engine;
  const Value& receiver = args.view()[0];
  const auto& entry = cache_.dispatch(Discriminator::of(receiver_key(receiver)), [&] {
    return entry_of(method_lookup(engine, receiver, name_, args_.size() - 1));
  });
  return call_target(entry, args, engine);
}

Typed ClosureMakeNode::eval(Frame& frame) {
  ++count_;
  std::vector<Value> captures;
  captures.reserve(captures_.size());
  for (const auto& c : captures_) captures.push_back(c->eval(frame).to_value());
  return Typed::of(Value::closure(function_, name_, std::move(captures)));
}

Typed CollectionNode::eval(Frame& frame) {
  ++count_;
  std::vector<Value> items;
  items.reserve(items_.size());
  for (const auto& c : items_) items.push_back(c->eval(frame).to_value());
  return Typed::of(kind() == NodeKind::TupleLit ? Value::tuple(std::move(items))
                                                : Value::list(std::move(items)));
}

std::string DispatchCache::describe() const {
  if (megamorphic_) return "mega";
  if (entries_.empty()) return "uninit";
  return "cache[" + std::to_string(entries_.size()) + "]";
}

std::string ExecNode::state() const {
  if (const auto* s = spec_state()) return s->describe();
  if (const auto* c = cache()) return c->describe();
  return "-";
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Literal: return "literal";
    case NodeKind::LocalRead: return "local-read";
    case NodeKind::LocalWrite: return "local-write";
    case NodeKind::GlobalRef: return "global-ref";
    case NodeKind::Branch: return "branch";
    case NodeKind::Loop: return "loop";
    case NodeKind::Return: return "return";
    case NodeKind::BinaryOp: return "binary-op";
    case NodeKind::UnaryOp: return "unary-op";
    case NodeKind::Logical: return "logical";
    case NodeKind::Call: return "call";
    case NodeKind::MethodCall: return "method-call";
    case NodeKind::ClosureMake: return "closure-make";
    case NodeKind::Block: return "block";
    case NodeKind::ExprStmt: return "expr-stmt";
    case NodeKind::TupleLit: return "tuple";
    case NodeKind::ListLit: return "list";
  }
  return "?";
}

}  // namespace minigolo::ast_engine
