#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minigolo/frontend/ast.hpp"
#include "minigolo/ir/ir.hpp"
#include "minigolo/ir/passes.hpp"
#include "minigolo/support/errors.hpp"

namespace minigolo {

/// check_references found problems. Positioned at the first diagnostic.
class ReferenceError : public CompileError {
 public:
  explicit ReferenceError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct Compilation {
  ast::Module ast;
  /// Checked IR with lambdas in place (what the AST engine runs by default).
  ir::Module checked;
  /// Lifted and slot-allocated IR (bytecode compiler input).
  ir::Module lifted;
};

/// parse -> lower -> check_references -> lift_closures -> allocate_slots.
/// Throws LexError, ParseError, ReferenceError or CompileError.
Compilation compile_source(std::string_view source);

/// `<line>:<col>: error: <message>` for each diagnostic, or the single error's position.
std::string format_source_error(const SourceError& error, std::string_view file);

}  // namespace minigolo
