#pragma once

#include <algorithm>
#include <optional>
#include <string_view>

#include "gre/engine/engine.hpp"

namespace gre {

// Min-label propagation. Expects a symmetrized graph; on a directed one the
// labels are not components.
class Cc {
 public:
  using vertex_data_type = GlobalId;
  using scatter_data_type = GlobalId;
  using combine_data_type = GlobalId;

  static constexpr std::string_view kName = "cc";
  static constexpr bool kCombineActivatesApply = true;
  static constexpr bool kApplyAll = false;
  static constexpr bool kAliasVertexScatter = false;
  static constexpr bool kNeedsWeights = false;

  GlobalId scatter(const GlobalId& old_label, const EdgeContext&) const { return old_label; }
  GlobalId combine(const GlobalId& a, const GlobalId& b) const { return std::min(a, b); }
  GlobalId combine_identity() const { return kNoVertex; }
  bool apply(GlobalId& label, GlobalId& old_label, const GlobalId& sum) const {
    if (sum >= label) return false;
    label = sum;
    old_label = sum;
    return true;
  }
  bool assert_to_halt() const { return false; }
};

inline auto cc_init() {
  return [](GlobalId g) -> std::optional<MasterInit<GlobalId, GlobalId>> {
    return MasterInit<GlobalId, GlobalId>{g, g, true};
  };
}

}  // namespace gre
