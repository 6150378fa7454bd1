#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "gre/partition/agent_graph.hpp"

namespace gre {

// Binary partition file, little-endian:
//   "GREPART\0" magic, u32 version, u32 index, u32 k, u32 flags
//   (bit 0 weighted, bit 1 symmetrized), u32 master/scatter/combiner counts,
//   then u64-length-prefixed sections: local_to_global, row_offsets,
//   column_indices, agent_owner, scatter_placement_offsets,
//   scatter_placement, combiner_presence_offsets, combiner_presence,
//   global_out_degree, edge_weights.
inline constexpr std::uint32_t kPartitionFileVersion = 1;

void write_partition(std::ostream& out, const AgentGraphPartition& part);
AgentGraphPartition read_partition(std::istream& in);

void write_partition(const std::filesystem::path& path, const AgentGraphPartition& part);
AgentGraphPartition read_partition(const std::filesystem::path& path);

// part-00000.grp ... inside `dir`.
std::filesystem::path partition_file_name(const std::filesystem::path& dir, PartitionId index);
void write_partitions(const std::filesystem::path& dir,
                      std::span<const AgentGraphPartition> parts);
// Loads every partition file in `dir`; checks indices are 0..k-1.
std::vector<AgentGraphPartition> read_partitions(const std::filesystem::path& dir);

}  // namespace gre
