#include <doctest.h>

#include "minigolo/frontend/ast_dump.hpp"
#include "minigolo/frontend/lexer.hpp"
#include "minigolo/frontend/parser.hpp"
#include "minigolo/support/errors.hpp"
#include "test_support.hpp"

using namespace minigolo;

namespace {

std::vector<std::pair<TokenKind, std::string>> kinds_and_lexemes(std::string_view src) {
  std::vector<std::pair<TokenKind, std::string>> out;
  for (const auto& t : tokenize(src)) out.emplace_back(t.kind, t.lexeme);
  return out;
}

const char* kFib = R"(module samples.Concurrency

local function fib = |n| {
  if n <= 1 {
    return n
  } else {
    return fib(n - 1) + fib(n - 2)
  }
}
)";

}  // namespace

TEST_CASE("tokenize int plus long") {
  const auto toks = kinds_and_lexemes("10 + 10_L");
  REQUIRE(toks.size() == 4);
  CHECK(toks[0] == std::pair{TokenKind::IntLiteral, std::string("10")});
  CHECK(toks[1] == std::pair{TokenKind::Operator, std::string("+")});
  CHECK(toks[2] == std::pair{TokenKind::LongLiteral, std::string("10_L")});
  CHECK(toks[3].first == TokenKind::Eof);
}

TEST_CASE("long literal payload excludes the suffix") {
  const auto toks = tokenize("120_L");
  REQUIRE(toks.size() == 2);
  CHECK(toks[0].kind == TokenKind::LongLiteral);
  CHECK(toks[0].lexeme == "120_L");
  CHECK(toks[0].int_value == 120);
}

TEST_CASE("empty source is a lone eof") {
  const auto toks = tokenize("");
  REQUIRE(toks.size() == 1);
  CHECK(toks[0].kind == TokenKind::Eof);
}

TEST_CASE("lexer errors carry positions") {
  CHECK_THROWS_AS(tokenize("\"open"), LexError);
  try {
    tokenize("x = 1\n  12_X");
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.pos().line == 2);
    CHECK(e.pos().column == 3);
  }
}

TEST_CASE("literal kinds") {
  const auto toks = tokenize("1 2_L 3.25 \"s\\n\" true null");
  CHECK(toks[0].kind == TokenKind::IntLiteral);
  CHECK(toks[1].kind == TokenKind::LongLiteral);
  CHECK(toks[2].kind == TokenKind::DoubleLiteral);
  CHECK(toks[2].double_value == 3.25);
  CHECK(toks[3].kind == TokenKind::StringLiteral);
  CHECK(toks[3].string_value == "s\n");
  CHECK(toks[4].kind == TokenKind::Keyword);
  CHECK(toks[5].kind == TokenKind::Keyword);
}

TEST_CASE("token positions point at their lexeme in every corpus file") {
  for (const auto& file : testing::corpus_files("ok")) {
    const std::string src = testing::read_file(file);
    std::vector<std::string> lines;
    std::istringstream in(src);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    for (const auto& t : tokenize(src)) {
      if (t.kind == TokenKind::Eof) continue;
      CHECK_MESSAGE(src.compare(t.pos.offset, t.lexeme.size(), t.lexeme) == 0, file.filename().string());
      const auto& line = lines.at(t.pos.line - 1);
      CHECK(line.compare(t.pos.column - 1, t.lexeme.size(), t.lexeme) == 0);
    }
  }
}

TEST_CASE("lexemes plus skipped text reconstruct the source") {
  for (const auto& file : testing::corpus_files("ok")) {
    const std::string src = testing::read_file(file);
    std::size_t at = 0;
    for (const auto& t : tokenize(src)) {
      if (t.kind == TokenKind::Eof) break;
      const std::string gap = src.substr(at, t.pos.offset - at);
      // Skipped text is whitespace and `#` comments only.
      bool in_comment = false;
      for (char c : gap) {
        if (c == '#') in_comment = true;
        if (c == '\n') in_comment = false;
        CHECK((in_comment || c == ' ' || c == '\n' || c == '\t' || c == '\r'));
      }
      at = t.pos.offset + t.lexeme.size();
    }
  }
}

TEST_CASE("parse a minimal module") {
  const auto m = parse_source("module m  function f = |n| { return n }");
  CHECK(m.name == "m");
  REQUIRE(m.functions.size() == 1);
  CHECK(m.functions[0].name == "f");
  CHECK(m.functions[0].params == std::vector<std::string>{"n"});
  CHECK_FALSE(m.functions[0].synthetic);
}

TEST_CASE("fib declaration is local with one param and an if body") {
  const auto m = parse_source(kFib);
  CHECK(m.name == "samples.Concurrency");
  REQUIRE(m.functions.size() == 1);
  const auto& fib = m.functions[0];
  CHECK(fib.local);
  CHECK(fib.params == std::vector<std::string>{"n"});
  REQUIRE(fib.body.stmts.size() == 1);
  CHECK(std::holds_alternative<ast::If>(fib.body.stmts[0]->node));
}

TEST_CASE("unbalanced block reports the missing brace") {
  try {
    parse_source("module m  function f = |n| {");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    const auto& exp = e.expected();
    CHECK(std::find(exp.begin(), exp.end(), "'}'") != exp.end());
  }
}

TEST_CASE("render_ast formats") {
  const auto m = parse_source("module m function f = |n| -> n + 1");
  const std::string dump = render_ast(m);
  CHECK(dump.find("Binary +\n") != std::string::npos);
  CHECK(dump.find("  Reference n\n") != std::string::npos);
  CHECK(dump.find("  Literal Int 1\n") != std::string::npos);
}

TEST_CASE("render_ast golden dump for fib") {
  const auto m = parse_source(kFib);
  const std::string dump = render_ast(m);
  CHECK(dump == testing::read_file(MINIGOLO_GOLDEN_DIR "/fib.ast"));
  std::size_t count = 0;
  for (std::size_t at = dump.find("Function fib local"); at != std::string::npos;
       at = dump.find("Function fib local", at + 1)) {
    ++count;
  }
  CHECK(count == 1);
}

TEST_CASE("precedence follows the C family") {
  const auto m = parse_source("module m function f = || -> 1 + 2 * 3 == 7 and not false or false");
  const std::string dump = render_ast(m);
  const auto or_at = dump.find("Binary or");
  const auto and_at = dump.find("Binary and");
  const auto eq_at = dump.find("Binary ==");
  const auto plus_at = dump.find("Binary +");
  const auto times_at = dump.find("Binary *");
  REQUIRE(or_at != std::string::npos);
  CHECK(or_at < and_at);
  CHECK(and_at < eq_at);
  CHECK(eq_at < plus_at);
  CHECK(plus_at < times_at);
}

TEST_CASE("tuple and list literals") {
  const auto m = parse_source("module m function f = || -> [1, list[2], []]");
  const std::string dump = render_ast(m);
  CHECK(dump.find("Tuple\n") != std::string::npos);
  CHECK(dump.find("List\n") != std::string::npos);
}

TEST_CASE("parsing is deterministic and within two tokens of lookahead") {
  for (const auto& file : testing::corpus_files("ok")) {
    const std::string src = testing::read_file(file);
    const auto toks = tokenize(src);
    ParseStats stats;
    const auto a = parse(toks, &stats);
    const auto b = parse(toks);
    CHECK_MESSAGE(ast::structurally_equal(a, b), file.filename().string());
    CHECK(stats.max_lookahead <= 2);
  }
}

TEST_CASE("bad-syntax corpus fails with a position inside the file") {
  const auto files = testing::corpus_files("bad-syntax");
  CHECK(files.size() >= 5);
  for (const auto& file : files) {
    const std::string src = testing::read_file(file);
    const auto line_count = static_cast<std::uint32_t>(std::count(src.begin(), src.end(), '\n')) + 1;
    try {
      parse_source(src);
      FAIL("accepted " << file.filename().string());
    } catch (const SourceError& e) {
      CHECK(e.pos().line >= 1);
      CHECK(e.pos().line <= line_count);
    }
  }
}
