#include "minigolo/frontend/lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <limits>

#include "minigolo/support/errors.hpp"

namespace minigolo {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "int-literal";
    case TokenKind::LongLiteral: return "long-literal";
    case TokenKind::DoubleLiteral: return "double-literal";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Eof: return "eof";
  }
  return "?";
}

std::string describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::Eof: return "end of file";
    case TokenKind::Identifier: return "identifier '" + token.lexeme + "'";
    case TokenKind::Keyword:
    case TokenKind::Operator:
    case TokenKind::Punctuation: return "'" + token.lexeme + "'";
    default: return std::string(to_string(token.kind)) + " " + token.lexeme;
  }
}

namespace {

constexpr std::array<std::string_view, 18> kKeywords = {
    "module", "import", "struct", "augment", "function", "local",
    "let",    "var",    "if",     "else",    "while",    "return",
    "true",   "false",  "null",   "and",     "or",       "not",
};

// `list` is handled as a keyword too, see is_keyword().
constexpr std::string_view kListKeyword = "list";

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (at_end()) {
        Token eof;
        eof.kind = TokenKind::Eof;
        eof.pos = here();
        out.push_back(std::move(eof));
        return out;
      }
      out.push_back(next_token());
    }
  }

 private:
  bool at_end() const { return offset_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return offset_ + ahead < src_.size() ? src_[offset_ + ahead] : '\0';
  }
  SourcePos here() const {
    return {line_, column_, static_cast<std::uint32_t>(offset_)};
  }
  void advance() {
    if (src_[offset_] == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(src_[offset_]) & 0xC0) != 0x80) {
      // Columns count code points, not UTF-8 continuation bytes.
      ++column_;
    }
    ++offset_;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, SourcePos start) const {
    Token t;
    t.kind = kind;
    t.pos = start;
    t.lexeme = std::string(src_.substr(start.offset, offset_ - start.offset));
    return t;
  }

  Token next_token() {
    const SourcePos start = here();
    const char c = peek();
    if (is_ident_start(c)) {
      while (is_ident_char(peek())) advance();
      Token t = make(TokenKind::Identifier, start);
      if (is_keyword(t.lexeme)) t.kind = TokenKind::Keyword;
      return t;
    }
    if (is_digit(c)) return number(start);
    if (c == '"') return string(start);

    // Two-character operators first.
    static constexpr std::array<std::string_view, 5> kTwo = {"==", "!=", "<=", ">=", "->"};
    for (auto op : kTwo) {
      if (peek() == op[0] && peek(1) == op[1]) {
        advance();
        advance();
        return make(TokenKind::Operator, start);
      }
    }
    switch (c) {
      case '+': case '-': case '*': case '/': case '%': case '<': case '>': case '=':
        advance();
        return make(TokenKind::Operator, start);
      case '(': case ')': case '[': case ']': case '{': case '}':
      case '|': case ',': case ':': case '.':
        advance();
        return make(TokenKind::Punctuation, start);
      default:
        break;
    }
    throw LexError(start, std::string("unexpected character '") + c + "'");
  }

  Token number(SourcePos start) {
    while (is_digit(peek())) advance();
    bool is_double = false;
    if (peek() == '.' && is_digit(peek(1))) {
      is_double = true;
      advance();
      while (is_digit(peek())) advance();
      if (peek() == 'e' || peek() == 'E') {
        std::size_t ahead = 1;
        if (peek(1) == '+' || peek(1) == '-') ahead = 2;
        if (!is_digit(peek(ahead))) {
          throw LexError(start, "malformed numeric literal: missing exponent digits");
        }
        for (std::size_t i = 0; i < ahead; ++i) advance();
        while (is_digit(peek())) advance();
      }
    }
    const std::size_t digits_end = offset_;
    bool is_long = false;
    if (!is_double && peek() == '_' && peek(1) == 'L') {
      advance();
      advance();
      is_long = true;
    }
    if (is_ident_char(peek()) || (peek() == '.' && is_digit(peek(1)))) {
      while (is_ident_char(peek())) advance();
      throw LexError(start, "malformed numeric literal '" +
                                std::string(src_.substr(start.offset, offset_ - start.offset)) + "'");
    }

    Token t = make(is_double ? TokenKind::DoubleLiteral
                             : (is_long ? TokenKind::LongLiteral : TokenKind::IntLiteral),
                   start);
    const char* first = src_.data() + start.offset;
    const char* last = src_.data() + digits_end;
    if (is_double) {
      auto [ptr, ec] = std::from_chars(first, last, t.double_value);
      if (ec != std::errc() || ptr != last) {
        throw LexError(start, "malformed numeric literal '" + t.lexeme + "'");
      }
      return t;
    }
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw LexError(start, "numeric literal out of range '" + t.lexeme + "'");
    }
    if (!is_long && value > std::numeric_limits<std::int32_t>::max()) {
      throw LexError(start, "int literal out of range '" + t.lexeme + "'");
    }
    t.int_value = value;
    return t;
  }

  Token string(SourcePos start) {
    advance();  // opening quote
    std::string value;
    for (;;) {
      if (at_end() || peek() == '\n') throw LexError(start, "unterminated string literal");
      char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const SourcePos esc = here();
        advance();
        if (at_end()) throw LexError(start, "unterminated string literal");
        switch (peek()) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          default: throw LexError(esc, std::string("unknown escape sequence '\\") + peek() + "'");
        }
        advance();
        continue;
      }
      value += c;
      advance();
    }
    Token t = make(TokenKind::StringLiteral, start);
    t.string_value = std::move(value);
    return t;
  }

  std::string_view src_;
  std::size_t offset_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t column_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word) {
  if (word == kListKeyword) return true;
  for (auto kw : kKeywords) {
    if (kw == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace minigolo
