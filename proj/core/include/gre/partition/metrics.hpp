#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gre/partition/agent_graph.hpp"
#include "gre/partition/placement.hpp"

namespace gre {

struct PartitionMetrics {
  PartitionId k = 0;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  double mean_degree = 0.0;

  std::uint64_t scatter_count = 0;
  std::uint64_t combiner_count = 0;
  std::uint64_t agent_count = 0;
  // Agents per vertex.
  double agent_rate = 0.0;
  // agent_rate / mean_degree: communication edges per original edge. For the
  // hash baseline, which stands for plain vertex sharding, this is
  // edge_cut_rate instead.
  double equivalent_edge_cut_rate = 0.0;
  // Edges with an endpoint mastered on another partition, over |E|.
  std::uint64_t cut_edges = 0;
  double edge_cut_rate = 0.0;
  // Placement mode name, empty when unknown.
  std::string mode;
  // Communication edges per vertex.
  double cut_factor = 0.0;
  double scatter_share = 0.0;
  double combiner_share = 0.0;

  // max_i Ne(i) / (|E| / k).
  double edge_balance = 0.0;
  double epsilon = 0.05;
  bool balance_satisfied = true;
  std::vector<std::uint64_t> partition_edges;

  // Vertex-cut view of the same placement: each (vertex, partition)
  // co-location is a replica; cut factor 2 (R - |V|) / |V|.
  std::uint64_t replicas = 0;
  double vertexcut_cut_factor = 0.0;

  bool operator==(const PartitionMetrics&) const = default;
};

// Throws MetricsError when vertex_count is zero.
PartitionMetrics compute_metrics(std::span<const AgentGraphPartition> parts,
                                 std::uint64_t vertex_count, std::uint64_t edge_count,
                                 double mean_degree, double epsilon = 0.05,
                                 std::optional<PlacementMode> mode = std::nullopt);

// |V|, |E| and mean degree taken from the partitions themselves.
PartitionMetrics compute_metrics(std::span<const AgentGraphPartition> parts,
                                 double epsilon = 0.05,
                                 std::optional<PlacementMode> mode = std::nullopt);

// Present when max_i Ne(i) >= (1 + epsilon) |E| / k.
std::optional<std::string> balance_warning(const PartitionMetrics& m);

std::string metrics_to_json(const PartitionMetrics& m);
// Throws FormatError on missing or mistyped fields.
PartitionMetrics metrics_from_json(std::string_view text);

}  // namespace gre
