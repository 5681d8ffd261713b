#include "minigolo/pipeline.hpp"

#include "minigolo/frontend/parser.hpp"

namespace minigolo {

namespace {

std::string first_message(const std::vector<Diagnostic>& diagnostics) {
  return diagnostics.empty() ? std::string("reference check failed") : diagnostics.front().message;
}

SourcePos first_pos(const std::vector<Diagnostic>& diagnostics) {
  return diagnostics.empty() ? SourcePos{} : diagnostics.front().pos;
}

}  // namespace

ReferenceError::ReferenceError(std::vector<Diagnostic> diagnostics)
    : CompileError(first_pos(diagnostics), first_message(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

Compilation compile_source(std::string_view source) {
  Compilation c;
  c.ast = parse_source(source);
  c.checked = lower(c.ast);
  if (auto diagnostics = check_references(c.checked); !diagnostics.empty()) {
    throw ReferenceError(std::move(diagnostics));
  }
  c.lifted = allocate_slots(lift_closures(c.checked));
  return c;
}

std::string format_source_error(const SourceError& error, std::string_view file) {
  std::string out;
  auto line = [&](SourcePos pos, const std::string& message) {
    out += std::string(file) + ":" + to_string(pos) + ": error: " + message + "\n";
  };
  if (const auto* refs = dynamic_cast<const ReferenceError*>(&error)) {
    for (const auto& d : refs->diagnostics()) line(d.pos, d.message);
  } else {
    line(error.pos(), error.message());
  }
  return out;
}

}  // namespace minigolo
