#pragma once

#include <limits>
#include <optional>
#include <string_view>
#include <tuple>

#include "gre/engine/engine.hpp"

namespace gre {

inline constexpr std::uint64_t kInfiniteDistance = std::numeric_limits<std::uint64_t>::max();

inline constexpr std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > kInfiniteDistance - b ? kInfiniteDistance : a + b;
}

// Candidate distance and the vertex it came through. Ties on distance go to
// the smaller predecessor id so the winner does not depend on arrival order.
struct PathCandidate {
  std::uint64_t distance = kInfiniteDistance;
  GlobalId predecessor = kNoVertex;

  bool operator==(const PathCandidate&) const = default;
  friend bool operator<(const PathCandidate& a, const PathCandidate& b) {
    return std::tie(a.distance, a.predecessor) < std::tie(b.distance, b.predecessor);
  }
};

// Label-correcting shortest paths from one source over non-negative weights.
class Sssp {
 public:
  using vertex_data_type = PathCandidate;        // current distance and predecessor
  using scatter_data_type = std::uint64_t;       // distance last scattered
  using combine_data_type = PathCandidate;

  static constexpr std::string_view kName = "sssp";
  static constexpr bool kCombineActivatesApply = true;
  static constexpr bool kApplyAll = false;
  static constexpr bool kAliasVertexScatter = false;
  static constexpr bool kNeedsWeights = true;

  explicit Sssp(GlobalId source, bool record_predecessor = true)
      : source_(source), record_predecessor_(record_predecessor) {}

  PathCandidate scatter(const std::uint64_t& old_distance, const EdgeContext& edge) const {
    return {saturating_add(old_distance, edge.weight),
            record_predecessor_ ? edge.source : kNoVertex};
  }
  PathCandidate combine(const PathCandidate& a, const PathCandidate& b) const {
    return b < a ? b : a;
  }
  PathCandidate combine_identity() const { return {}; }
  bool apply(PathCandidate& vertex, std::uint64_t& old_distance, const PathCandidate& sum) const {
    if (sum.distance >= vertex.distance) return false;
    vertex = sum;
    old_distance = sum.distance;
    return true;
  }
  bool assert_to_halt() const { return false; }

  GlobalId source() const noexcept { return source_; }
  bool record_predecessor() const noexcept { return record_predecessor_; }

 private:
  GlobalId source_;
  bool record_predecessor_;
};

inline auto sssp_init(GlobalId source) {
  return [source](GlobalId g) -> std::optional<MasterInit<PathCandidate, std::uint64_t>> {
    if (g == source) return MasterInit<PathCandidate, std::uint64_t>{{0, kNoVertex}, 0, true};
    return MasterInit<PathCandidate, std::uint64_t>{{}, kInfiniteDistance, false};
  };
}

}  // namespace gre
