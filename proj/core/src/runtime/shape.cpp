#include "minigolo/runtime/shape.hpp"

namespace minigolo {

std::optional<std::uint32_t> Shape::slot_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

ShapeTable::ShapeTable() {
  shapes_.push_back(std::unique_ptr<Shape>(new Shape(0, {})));
}

const Shape* ShapeTable::define(const Shape* shape, std::string_view name) {
  if (shape->slot_of(name)) return shape;
  if (auto it = shape->transitions_.find(name); it != shape->transitions_.end()) {
    return it->second;
  }
  std::vector<std::string> names = shape->names_;
  names.emplace_back(name);
  auto id = static_cast<std::uint32_t>(shapes_.size());
  shapes_.push_back(std::unique_ptr<Shape>(new Shape(id, std::move(names))));
  const Shape* successor = shapes_.back().get();
  shape->transitions_.emplace(std::string(name), successor);
  return successor;
}

}  // namespace minigolo
