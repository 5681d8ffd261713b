#pragma once

#include <string>

#include "minigolo/frontend/ast.hpp"

namespace minigolo {

/// Indented, line-oriented tree dump (two spaces per level). Stable across runs.
std::string render_ast(const ast::Module& module);
std::string render_ast(const ast::Expr& expr);

}  // namespace minigolo
