#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "minigolo/support/source_pos.hpp"

namespace minigolo {

enum class TokenKind : std::uint8_t {
  Keyword,
  Identifier,
  IntLiteral,
  LongLiteral,
  DoubleLiteral,
  StringLiteral,
  Operator,
  Punctuation,
  Eof,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Eof;
  /// Exact source text, including quotes for strings and the `_L` suffix for longs.
  std::string lexeme;
  SourcePos pos;

  // Literal payloads. Only the one matching `kind` is meaningful.
  std::int64_t int_value = 0;
  double double_value = 0.0;
  std::string string_value;

  bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
  bool is_keyword(std::string_view text) const { return is(TokenKind::Keyword, text); }
  bool is_symbol(std::string_view text) const {
    return (kind == TokenKind::Operator || kind == TokenKind::Punctuation) && lexeme == text;
  }
};

/// Human readable rendering used in parse error messages (`'}'`, `identifier 'x'`, `end of file`).
std::string describe(const Token& token);

}  // namespace minigolo
