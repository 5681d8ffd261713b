#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minigolo {

/// Immutable property layout shared by every dynamic object with the same
/// property-definition history. Transitions to successor shapes are cached.
class Shape {
 public:
  std::uint32_t id() const noexcept { return id_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& property_names() const noexcept { return names_; }
  std::optional<std::uint32_t> slot_of(std::string_view name) const;

 private:
  friend class ShapeTable;
  Shape(std::uint32_t id, std::vector<std::string> names) : id_(id), names_(std::move(names)) {}

  std::uint32_t id_;
  std::vector<std::string> names_;
  mutable std::map<std::string, const Shape*, std::less<>> transitions_;
};

/// Owns all shapes of one engine instance.
class ShapeTable {
 public:
  ShapeTable();
  ShapeTable(const ShapeTable&) = delete;
  ShapeTable& operator=(const ShapeTable&) = delete;

  const Shape* root() const noexcept { return shapes_.front().get(); }

  /// Returns `shape` itself when `name` is already a property, otherwise the
  /// (cached) successor with `name` appended at slot `shape->size()`.
  const Shape* define(const Shape* shape, std::string_view name);

  std::size_t shape_count() const noexcept { return shapes_.size(); }

 private:
  std::vector<std::unique_ptr<Shape>> shapes_;
};

}  // namespace minigolo
