#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minigolo/support/source_pos.hpp"

namespace minigolo {

/// Base class for errors that carry a source position (lexing, parsing,
/// compile-time checks). The CLI maps every one of them to exit code 2.
class SourceError : public std::runtime_error {
 public:
  SourceError(SourcePos pos, std::string message)
      : std::runtime_error(message), pos_(pos), message_(std::move(message)) {}

  const SourcePos& pos() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

class LexError : public SourceError {
 public:
  using SourceError::SourceError;
};

class ParseError : public SourceError {
 public:
  ParseError(SourcePos pos, std::vector<std::string> expected, std::string found);

  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::vector<std::string> expected_;
  std::string found_;
};

/// Raised by closure lifting (assignment to a captured variable) and by the
/// bytecode compiler (jump offset overflow).
class CompileError : public SourceError {
 public:
  using SourceError::SourceError;
};

enum class ErrorKind : std::uint8_t {
  TypeMismatch,
  NoSuchMethod,
  DivisionByZero,
  ArityError,
  StackOverflow,
  IndexOutOfBounds,
  InvalidArgument,
  NotNumeric,
};

std::string_view to_string(ErrorKind kind);

/// One entry of a runtime call-stack trace, innermost first. `location` is
/// engine specific: `instr <i>` for the VM, `<line>:<col>` for the AST engine.
struct TraceEntry {
  std::string function;
  std::string location;
};

class RuntimeError : public std::runtime_error {
 public:
  RuntimeError(ErrorKind kind, std::string detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<TraceEntry>& trace() const noexcept { return trace_; }

  void add_frame(std::string function, std::string location) {
    trace_.push_back({std::move(function), std::move(location)});
  }

  /// `error: <kind>: <detail>` followed by one `  at <fn> (<loc>)` line per frame.
  std::string report() const;

 private:
  ErrorKind kind_;
  std::string detail_;
  std::vector<TraceEntry> trace_;
};

}  // namespace minigolo
