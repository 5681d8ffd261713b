#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace minigolo {

/// How a call site reacts to a guard miss.
struct DispatchPolicy {
  enum class Kind : std::uint8_t { Mono, Poly, None };

  Kind kind = Kind::Mono;
  std::uint32_t k = 1;  // chain depth bound for Poly

  static DispatchPolicy mono() { return {Kind::Mono, 1}; }
  static DispatchPolicy poly(std::uint32_t k);
  static DispatchPolicy none() { return {Kind::None, 0}; }

  /// Parses `mono`, `none` or `poly:<k>` with k >= 1. Throws std::invalid_argument.
  static DispatchPolicy parse(std::string_view text);

  std::uint32_t depth_bound() const { return kind == Kind::None ? 0 : k; }
  std::string to_string() const;

  friend bool operator==(const DispatchPolicy&, const DispatchPolicy&) = default;
};

}  // namespace minigolo
