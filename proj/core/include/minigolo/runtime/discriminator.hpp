#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "minigolo/runtime/value.hpp"

namespace minigolo {

/// One guard component: a kind, a dynamic-object shape id, a structure type
/// id or a callee identity, tagged in the top byte.
class GuardKey {
 public:
  enum class Tag : std::uint8_t { Kind = 0, Shape = 1, Type = 2, Callee = 3 };

  constexpr GuardKey() = default;
  static constexpr GuardKey of_kind(minigolo::Kind k) { return make(Tag::Kind, static_cast<std::uint64_t>(k)); }
  static constexpr GuardKey of_shape(std::uint32_t id) { return make(Tag::Shape, id); }
  static constexpr GuardKey of_type(std::uint32_t id) { return make(Tag::Type, id); }
  static constexpr GuardKey of_callee(std::uint32_t id) { return make(Tag::Callee, id); }

  constexpr Tag tag() const { return static_cast<Tag>(bits_ >> 56); }
  constexpr std::uint64_t payload() const { return bits_ & ((std::uint64_t{1} << 56) - 1); }
  std::string describe() const;

  friend constexpr bool operator==(GuardKey, GuardKey) = default;

 private:
  static constexpr GuardKey make(Tag tag, std::uint64_t payload) {
    GuardKey k;
    k.bits_ = (static_cast<std::uint64_t>(tag) << 56) | payload;
    return k;
  }
  std::uint64_t bits_ = 0;
};

/// Shape id for dynamic objects, structure type for structure instances, kind otherwise.
GuardKey receiver_key(const Value& v);

struct Discriminator {
  std::array<GuardKey, 2> keys{};
  std::uint8_t arity = 0;

  static Discriminator of(GuardKey a) {
    Discriminator d;
    d.keys[0] = a;
    d.arity = 1;
    return d;
  }
  static Discriminator of(GuardKey a, GuardKey b) {
    Discriminator d;
    d.keys = {a, b};
    d.arity = 2;
    return d;
  }
  static Discriminator kinds(Kind a, Kind b) { return of(GuardKey::of_kind(a), GuardKey::of_kind(b)); }

  std::string describe() const;
  friend bool operator==(const Discriminator&, const Discriminator&) = default;
};

}  // namespace minigolo
