#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "gre/graph/types.hpp"

namespace gre {

// Local -> global is a flat array (hot path); global -> local is a hash map.
// Within one index the two directions are mutually inverse.
class IdIndex {
 public:
  // Appends `global` at the next local id. Throws ConstructionError when the
  // global id is already registered.
  LocalId add(GlobalId global);

  std::optional<LocalId> find(GlobalId global) const {
    auto it = global_to_local_.find(global);
    if (it == global_to_local_.end()) return std::nullopt;
    return it->second;
  }

  // Throws LookupError for unknown ids.
  LocalId to_local(GlobalId global) const;
  GlobalId to_global(LocalId local) const;

  std::size_t size() const noexcept { return local_to_global_.size(); }
  bool contains(GlobalId global) const { return global_to_local_.contains(global); }
  const std::vector<GlobalId>& local_to_global() const noexcept { return local_to_global_; }

  void reserve(std::size_t n) {
    local_to_global_.reserve(n);
    global_to_local_.reserve(n);
  }

 private:
  std::vector<GlobalId> local_to_global_;
  std::unordered_map<GlobalId, LocalId> global_to_local_;
};

}  // namespace gre
