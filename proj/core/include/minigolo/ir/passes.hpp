#pragma once

#include <string>
#include <vector>

#include "minigolo/frontend/ast.hpp"
#include "minigolo/ir/ir.hpp"

namespace minigolo {

struct Diagnostic {
  enum class Severity { Error };
  Severity severity = Severity::Error;
  std::string message;
  SourcePos pos;
};

/// Structure-preserving AST -> IR lowering. Expression-bodied lambdas become a
/// Block holding a single Return.
ir::Module lower(const ast::Module& module);

/// Reports every reference that does not resolve through, in order: enclosing
/// lambda captures, function locals/params, module functions and structures,
/// imported library functions, builtins. Also reports duplicate declarations,
/// assignments to immutable bindings and ambiguous imports.
std::vector<Diagnostic> check_references(const ir::Module& module);

/// Replaces every Lambda with MakeClosure over a synthetic `__lambda$<n>`
/// function (n dense from 0 in source order) whose leading params are the
/// captured variables. Throws CompileError when a lambda assigns a captured variable.
ir::Module lift_closures(const ir::Module& module);

/// Numbers params (0..p-1) and every let/var binding with a distinct slot, and
/// marks each Ref/Call/Assign as Local (with slot) or Global.
ir::Function allocate_slots(const ir::Function& function);
ir::Module allocate_slots(const ir::Module& module);

/// Indented dump for `--emit ir`.
std::string render_ir(const ir::Module& module);

/// Counts Lambda nodes anywhere in the module.
std::size_t count_lambdas(const ir::Module& module);

}  // namespace minigolo
