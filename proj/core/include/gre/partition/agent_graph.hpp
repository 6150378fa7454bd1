#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gre/graph/csr.hpp"
#include "gre/graph/edge_stream.hpp"
#include "gre/graph/property_column.hpp"
#include "gre/partition/placement.hpp"

namespace gre {

enum class VertexKind { master, scatter, combiner };

// One partition of the agent graph.
//
// Local ids: masters are 0..n-1 in ascending global-id order, scatter agents
// follow, then combiner agents (each group ascending by global id). The CSR
// spans all local vertices and holds only ordinary edges; the implicit
// master->scatter and combiner->master edges live in scatter_placement and
// agent_owner. A vertex may have both a scatter and a combiner on the same
// partition, so global->local lookup is per kind.
struct AgentGraphPartition {
  PartitionId index = 0;
  PartitionId k = 1;
  bool symmetrized = false;

  LocalId master_count = 0;
  LocalId scatter_count = 0;
  LocalId combiner_count = 0;

  CsrGraph csr;
  std::vector<GlobalId> local_to_global;
  std::unordered_map<GlobalId, LocalId> master_index;
  std::unordered_map<GlobalId, LocalId> scatter_index;
  std::unordered_map<GlobalId, LocalId> combiner_index;

  // Owner partition of the master behind each agent, indexed by
  // local - master_count.
  std::vector<PartitionId> agent_owner;

  // Per master: remote partitions holding a scatter (S(v)) and holding a
  // combiner (C(v)) of it. Offsets have master_count + 1 entries.
  std::vector<std::uint64_t> scatter_placement_offsets;
  std::vector<PartitionId> scatter_placement;
  std::vector<std::uint64_t> combiner_presence_offsets;
  std::vector<PartitionId> combiner_presence;

  // Whole-graph out-degree of every master and of the master behind every
  // scatter agent (length master_count + scatter_count).
  std::vector<std::uint64_t> global_out_degree;

  // Aligned with CSR slots.
  std::optional<PropertyColumn<Weight>> edge_weights;

  LocalId local_count() const noexcept { return master_count + scatter_count + combiner_count; }
  std::size_t edge_count() const noexcept { return csr.edge_count(); }
  bool weighted() const noexcept { return edge_weights.has_value(); }

  VertexKind kind(LocalId l) const noexcept {
    if (l < master_count) return VertexKind::master;
    if (l < master_count + scatter_count) return VertexKind::scatter;
    return VertexKind::combiner;
  }

  std::optional<LocalId> find_master(GlobalId g) const { return find(master_index, g); }
  std::optional<LocalId> find_scatter(GlobalId g) const { return find(scatter_index, g); }
  std::optional<LocalId> find_combiner(GlobalId g) const { return find(combiner_index, g); }

  std::span<const PartitionId> scatters_of(LocalId master) const {
    return std::span<const PartitionId>(scatter_placement)
        .subspan(scatter_placement_offsets[master],
                 scatter_placement_offsets[master + 1] - scatter_placement_offsets[master]);
  }
  std::span<const PartitionId> combiners_of(LocalId master) const {
    return std::span<const PartitionId>(combiner_presence)
        .subspan(combiner_presence_offsets[master],
                 combiner_presence_offsets[master + 1] - combiner_presence_offsets[master]);
  }

  // Rebuilds the three global->local maps from local_to_global.
  void rebuild_indexes();

 private:
  static std::optional<LocalId> find(const std::unordered_map<GlobalId, LocalId>& m, GlobalId g) {
    auto it = m.find(g);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }
};

// Owner partition of every vertex in vertex_set(edges) order.
std::vector<PartitionId> assign_owners(const EdgeStream& edges, const PlacementResult& placement,
                                       std::span<const GlobalId> vertices);

// Applies the combiner and scatter transformations to every partition.
// Throws ConstructionError if the placement is misaligned or out of range.
std::vector<AgentGraphPartition> build_agent_graph(const EdgeStream& edges,
                                                   const PlacementResult& placement);

// Checks the agent-graph invariants; returns one message per violation.
std::vector<std::string> validate_agent_graph(std::span<const AgentGraphPartition> parts,
                                              const EdgeStream& edges);

// Same checks without the original stream: structural rules only.
std::vector<std::string> validate_agent_graph(std::span<const AgentGraphPartition> parts);

}  // namespace gre
