#include "minigolo/support/errors.hpp"

namespace minigolo {

namespace {

std::string describe_parse_error(const std::vector<std::string>& expected,
                                 const std::string& found) {
  std::string msg = "expected ";
  if (expected.size() > 1) msg += "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += ", ";
    msg += expected[i];
  }
  msg += " but found " + found;
  return msg;
}

}  // namespace

ParseError::ParseError(SourcePos pos, std::vector<std::string> expected, std::string found)
    : SourceError(pos, describe_parse_error(expected, found)),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NoSuchMethod: return "NoSuchMethod";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::StackOverflow: return "StackOverflow";
    case ErrorKind::IndexOutOfBounds: return "IndexOutOfBounds";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotNumeric: return "NotNumeric";
  }
  return "Unknown";
}

RuntimeError::RuntimeError(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

std::string RuntimeError::report() const {
  std::string out = "error: ";
  out += to_string(kind_);
  out += ": ";
  out += detail_;
  out += '\n';
  for (const auto& frame : trace_) {
    out += "  at " + frame.function + " (" + frame.location + ")\n";
  }
  return out;
}

}  // namespace minigolo
