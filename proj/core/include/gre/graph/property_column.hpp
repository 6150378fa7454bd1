#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gre {

// A named flat array of fixed-width items keyed by local vertex or edge index.
template <class T>
class PropertyColumn {
 public:
  PropertyColumn() = default;
  PropertyColumn(std::string name, std::size_t count, const T& fill = T{})
      : name_(std::move(name)), items_(count, fill) {}
  PropertyColumn(std::string name, std::vector<T> items)
      : name_(std::move(name)), items_(std::move(items)) {}

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  T& operator[](std::size_t i) noexcept { return items_[i]; }
  const T& operator[](std::size_t i) const noexcept { return items_[i]; }

  std::span<T> items() noexcept { return items_; }
  std::span<const T> items() const noexcept { return items_; }

  void assign(std::size_t count, const T& value) { items_.assign(count, value); }

  bool operator==(const PropertyColumn&) const = default;

 private:
  std::string name_;
  std::vector<T> items_;
};

}  // namespace gre
