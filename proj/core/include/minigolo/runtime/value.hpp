#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minigolo {

enum class Kind : std::uint8_t {
  Null,
  Bool,
  Int,
  Long,
  Double,
  Str,
  FunctionRef,
  Closure,
  Tuple,
  List,
  Struct,
  DynamicObject,
};

inline constexpr std::size_t kKindCount = 12;

/// Type name used in diagnostics, guards and augmentation targets (`Int`, `Tuple`...).
std::string_view kind_name(Kind kind);
bool kind_from_name(std::string_view name, Kind& out);

inline constexpr bool is_numeric(Kind k) {
  return k == Kind::Int || k == Kind::Long || k == Kind::Double;
}

/// Counts constructions of Int/Long/Double values while enabled. Each engine
/// runs on one thread, so the counter is thread-local.
namespace boxing {
inline thread_local bool enabled = false;
inline thread_local std::uint64_t count = 0;

inline void note() noexcept {
  if (enabled) [[unlikely]] ++count;
}
}  // namespace boxing

class Value;
class Shape;
struct StructType;

struct HeapObject {
  virtual ~HeapObject() = default;
};

struct StrObject final : HeapObject {
  explicit StrObject(std::string t) : text(std::move(t)) {}
  std::string text;
};

struct FunctionObject final : HeapObject {
  FunctionObject(std::uint32_t i, std::string n) : index(i), name(std::move(n)) {}
  std::uint32_t index;
  std::string name;
};

struct ClosureObject final : HeapObject {
  ClosureObject(std::uint32_t i, std::string n, std::vector<Value> c);
  std::uint32_t index;
  std::string name;
  std::vector<Value> captures;
};

/// Tuples are immutable once built.
struct TupleObject final : HeapObject {
  explicit TupleObject(std::vector<Value> v);
  const std::vector<Value> items;
};

struct ListObject final : HeapObject {
  explicit ListObject(std::vector<Value> v);
  std::vector<Value> items;
};

struct StructObject final : HeapObject {
  StructObject(const StructType* t, std::vector<Value> f);
  const StructType* type;
  std::vector<Value> fields;
};

struct DynamicObjectData final : HeapObject {
  explicit DynamicObjectData(const Shape* s);
  const Shape* shape;
  std::vector<Value> slots;
};

/// Tagged dynamic value. Numbers and booleans are stored inline; everything
/// else is a shared reference to a heap object.
class Value {
 public:
  Value() noexcept : kind_(Kind::Null), l_(0) {}

  static Value null() noexcept { return {}; }
  static Value boolean(bool b) noexcept {
    Value v(Kind::Bool);
    v.b_ = b;
    return v;
  }
  static Value integer(std::int32_t i) noexcept {
    boxing::note();
    Value v(Kind::Int);
    v.i_ = i;
    return v;
  }
  static Value long_integer(std::int64_t l) noexcept {
    boxing::note();
    Value v(Kind::Long);
    v.l_ = l;
    return v;
  }
  static Value real(double d) noexcept {
    boxing::note();
    Value v(Kind::Double);
    v.d_ = d;
    return v;
  }
  static Value str(std::string text);
  static Value function(std::uint32_t index, std::string name);
  static Value closure(std::uint32_t index, std::string name, std::vector<Value> captures);
  static Value tuple(std::vector<Value> items);
  static Value list(std::vector<Value> items);
  static Value structure(const StructType* type, std::vector<Value> fields);
  static Value dynamic_object(const Shape* root);

  Kind kind() const noexcept { return kind_; }
  bool is(Kind k) const noexcept { return kind_ == k; }
  bool is_null() const noexcept { return kind_ == Kind::Null; }
  bool is_numeric() const noexcept { return minigolo::is_numeric(kind_); }
  bool is_callable() const noexcept {
    return kind_ == Kind::FunctionRef || kind_ == Kind::Closure;
  }

  bool as_bool() const noexcept { return b_; }
  std::int32_t as_int() const noexcept { return i_; }
  std::int64_t as_long() const noexcept { return l_; }
  double as_double() const noexcept { return d_; }

  const std::string& as_str() const { return heap<StrObject>().text; }
  const FunctionObject& as_function() const { return heap<FunctionObject>(); }
  const ClosureObject& as_closure() const { return heap<ClosureObject>(); }
  const TupleObject& as_tuple() const { return heap<TupleObject>(); }
  ListObject& as_list() const { return heap<ListObject>(); }
  StructObject& as_struct() const { return heap<StructObject>(); }
  DynamicObjectData& as_object() const { return heap<DynamicObjectData>(); }

  /// Items of a Tuple or List.
  std::span<const Value> items() const;

  /// Identity of the referenced heap object (null for inline kinds).
  const HeapObject* identity() const noexcept { return ref_.get(); }

 private:
  explicit Value(Kind k) noexcept : kind_(k), l_(0) {}
  Value(Kind k, std::shared_ptr<HeapObject> ref) noexcept : kind_(k), l_(0), ref_(std::move(ref)) {}

  template <class T>
  T& heap() const {
    return *static_cast<T*>(ref_.get());
  }

  Kind kind_;
  union {
    bool b_;
    std::int32_t i_;
    std::int64_t l_;
    double d_;
  };
  std::shared_ptr<HeapObject> ref_;
};

/// Language `==`: structural on Str/Tuple, identity on mutable objects,
/// numeric after promotion, false across unrelated kinds.
bool values_equal(const Value& a, const Value& b);

/// Bitwise identity of two constants (used to deduplicate constant pools).
bool same_constant(const Value& a, const Value& b);

}  // namespace minigolo
