#include "gre/graph/id_index.hpp"

#include <string>

#include "gre/error.hpp"

namespace gre {

LocalId IdIndex::add(GlobalId global) {
  const auto local = static_cast<LocalId>(local_to_global_.size());
  auto [it, inserted] = global_to_local_.emplace(global, local);
  if (!inserted) {
    throw ConstructionError("global id " + std::to_string(global) + " registered twice");
  }
  local_to_global_.push_back(global);
  return local;
}

LocalId IdIndex::to_local(GlobalId global) const {
  auto it = global_to_local_.find(global);
  if (it == global_to_local_.end()) {
    throw LookupError("unknown global id " + std::to_string(global));
  }
  return it->second;
}

GlobalId IdIndex::to_global(LocalId local) const {
  if (local >= local_to_global_.size()) {
    throw LookupError("unknown local id " + std::to_string(local));
  }
  return local_to_global_[local];
}

}  // namespace gre
