#pragma once

#include <string>

#include "minigolo/runtime/value.hpp"

namespace minigolo {

/// Textual form used by println and string concatenation.
std::string render(const Value& v);
void render_to(std::string& out, const Value& v);

std::string render_double(double d);

}  // namespace minigolo
