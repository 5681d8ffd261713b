#pragma once

#include <span>
#include <string_view>

#include "minigolo/frontend/ast.hpp"
#include "minigolo/frontend/token.hpp"

namespace minigolo {

struct ParseStats {
  /// Largest lookahead distance requested while parsing (1 = current token only).
  std::size_t max_lookahead = 0;
};

/// Recursive-descent LL(2) parser. Throws ParseError at the first violation.
ast::Module parse(std::span<const Token> tokens, ParseStats* stats = nullptr);

/// tokenize() followed by parse().
ast::Module parse_source(std::string_view source);

}  // namespace minigolo
