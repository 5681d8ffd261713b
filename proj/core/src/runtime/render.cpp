#include "minigolo/runtime/render.hpp"

#include <charconv>
#include <cmath>

#include "minigolo/runtime/program.hpp"
#include "minigolo/runtime/shape.hpp"

namespace minigolo {

std::string render_double(double d) {
  if (std::isnan(d)) return "NaN";
  if (std::isinf(d)) return d > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  std::string text(buf, end);
  if (text.find_first_of(".e") == std::string::npos) text += ".0";
  return text;
}

namespace {

void render_items(std::string& out, std::span<const Value> items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    render_to(out, items[i]);
  }
}

}  // namespace

void render_to(std::string& out, const Value& v) {
  switch (v.kind()) {
    case Kind::Null: out += "null"; return;
    case Kind::Bool: out += v.as_bool() ? "true" : "false"; return;
    case Kind::Int: out += std::to_string(v.as_int()); return;
    case Kind::Long: out += std::to_string(v.as_long()); return;
    case Kind::Double: out += render_double(v.as_double()); return;
    case Kind::Str: out += v.as_str(); return;
    case Kind::FunctionRef: out += "<function " + v.as_function().name + ">"; return;
    case Kind::Closure: out += "<closure " + v.as_closure().name + ">"; return;
    case Kind::Tuple:
      out += '[';
      render_items(out, v.items());
      out += ']';
      return;
    case Kind::List:
      out += "list[";
      render_items(out, v.items());
      out += ']';
      return;
    case Kind::Struct: {
      const auto& s = v.as_struct();
      out += "struct " + s.type->name + "{";
      for (std::size_t i = 0; i < s.fields.size(); ++i) {
        if (i > 0) out += ", ";
        out += s.type->fields[i] + "=";
        render_to(out, s.fields[i]);
      }
      out += '}';
      return;
    }
    case Kind::DynamicObject: {
      const auto& o = v.as_object();
      out += "DynamicObject{";
      const auto& names = o.shape->property_names();
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0) out += ", ";
        out += names[i] + "=";
        render_to(out, o.slots[i]);
      }
      out += '}';
      return;
    }
  }
}

std::string render(const Value& v) {
  std::string out;
  render_to(out, v);
  return out;
}

}  // namespace minigolo
