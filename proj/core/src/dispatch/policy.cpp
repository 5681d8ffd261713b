#include "minigolo/dispatch/policy.hpp"

#include <charconv>
#include <stdexcept>

namespace minigolo {

DispatchPolicy DispatchPolicy::poly(std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("poly depth must be at least 1");
  return {Kind::Poly, k};
}

DispatchPolicy DispatchPolicy::parse(std::string_view text) {
  if (text == "mono") return mono();
  if (text == "none") return none();
  constexpr std::string_view prefix = "poly:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto digits = text.substr(prefix.size());
    std::uint32_t k = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && end == digits.data() + digits.size() && k >= 1) return poly(k);
  }
  throw std::invalid_argument("unknown cache policy: " + std::string(text));
}

std::string DispatchPolicy::to_string() const {
  switch (kind) {
    case Kind::Mono: return "mono";
    case Kind::Poly: return "poly:" + std::to_string(k);
    case Kind::None: return "none";
  }
  return "?";
}

}  // namespace minigolo
