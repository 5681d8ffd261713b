#pragma once

#include <string_view>
#include <vector>

#include "minigolo/frontend/token.hpp"

namespace minigolo {

/// Splits source text into tokens. Whitespace and `#` comments are skipped;
/// the result always ends with exactly one Eof token.
/// Throws LexError on unterminated strings and malformed numeric literals.
std::vector<Token> tokenize(std::string_view source);

bool is_keyword(std::string_view word);

}  // namespace minigolo
