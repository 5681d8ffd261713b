#pragma once

#include <cstdint>
#include <string>

namespace minigolo {

/// 1-based line/column of the first character of a syntactic element, plus
/// the byte offset into the source buffer.
struct SourcePos {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  std::uint32_t offset = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

inline std::string to_string(const SourcePos& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

}  // namespace minigolo
