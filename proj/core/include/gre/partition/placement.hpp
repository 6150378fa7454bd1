#pragma once

#include <string_view>
#include <vector>

#include "gre/graph/edge_stream.hpp"
#include "gre/partition/heuristic.hpp"

namespace gre {

enum class PlacementMode { greedy_oblivious, greedy_coordinated, hash };

std::string_view to_string(PlacementMode mode);
// Accepts "greedy-oblivious", "greedy-coordinated", "hash" and the presets
// "gre-s" (coordinated) / "gre-p" (oblivious). Throws ParameterError.
PlacementMode parse_placement_mode(std::string_view name);

// Rule deciding which partition owns each master vertex.
enum class OwnerRule {
  majority,  // partition holding most incident edges, ties to lowest index
  hash,      // hash_place(v, k), the vertex-sharding baseline
};

struct PartitionConfig {
  PartitionId k = 1;
  PlacementMode mode = PlacementMode::greedy_coordinated;
  unsigned loaders = 1;
  std::size_t sync_interval = 4096;
  double epsilon = 0.05;
  MembershipMode membership = MembershipMode::exact;
  double false_positive_rate = 0.01;
};

void validate(const PartitionConfig& config);

struct PlacementResult {
  PartitionId k = 1;
  OwnerRule owner_rule = OwnerRule::majority;
  // Partition of each input edge, aligned with the stream.
  std::vector<PartitionId> edge_partition;

  std::vector<std::uint64_t> edge_counts() const;
  bool operator==(const PlacementResult&) const = default;
};

// Oblivious: the stream is cut into `loaders` contiguous chunks, each placed
// with a private state. Coordinated: loaders advance in lockstep rounds of
// sync_interval edges against a shared snapshot and merge their deltas, in
// loader order, at the end of every round. Hash ignores all state. The result
// is deterministic for fixed inputs.
PlacementResult partition_stream(const EdgeStream& edges, const PartitionConfig& config);

}  // namespace gre
