#include "gre/partition/agent_graph.hpp"

#include <algorithm>
#include <string>

#include "gre/error.hpp"

namespace gre {

void AgentGraphPartition::rebuild_indexes() {
  master_index.clear();
  scatter_index.clear();
  combiner_index.clear();
  master_index.reserve(master_count);
  scatter_index.reserve(scatter_count);
  combiner_index.reserve(combiner_count);
  for (LocalId l = 0; l < local_to_global.size(); ++l) {
    switch (kind(l)) {
      case VertexKind::master:
        master_index.emplace(local_to_global[l], l);
        break;
      case VertexKind::scatter:
        scatter_index.emplace(local_to_global[l], l);
        break;
      case VertexKind::combiner:
        combiner_index.emplace(local_to_global[l], l);
        break;
    }
  }
}

namespace {

std::unordered_map<GlobalId, std::uint32_t> dense_index(std::span<const GlobalId> vertices) {
  std::unordered_map<GlobalId, std::uint32_t> index;
  index.reserve(vertices.size());
  for (std::uint32_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  return index;
}

void check_placement(const EdgeStream& edges, const PlacementResult& placement) {
  if (placement.k < 1) throw ConstructionError("placement has k = 0");
  if (placement.edge_partition.size() != edges.size()) {
    throw ConstructionError("placement covers " + std::to_string(placement.edge_partition.size()) +
                            " edges but the stream has " + std::to_string(edges.size()));
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (placement.edge_partition[e] >= placement.k) {
      throw ConstructionError("edge " + std::to_string(e) + " placed on partition " +
                              std::to_string(placement.edge_partition[e]) + " >= k=" +
                              std::to_string(placement.k));
    }
  }
}

std::vector<PartitionId> owners_by_rule(const EdgeStream& edges, const PlacementResult& placement,
                                        std::span<const GlobalId> vertices,
                                        const std::unordered_map<GlobalId, std::uint32_t>& dense) {
  const PartitionId k = placement.k;
  std::vector<PartitionId> owner(vertices.size(), 0);
  if (k == 1) return owner;
  if (placement.owner_rule == OwnerRule::hash) {
    for (std::size_t i = 0; i < vertices.size(); ++i) owner[i] = hash_place(vertices[i], k);
    return owner;
  }
  std::vector<std::uint32_t> counts(vertices.size() * k, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const PartitionId p = placement.edge_partition[e];
    ++counts[std::size_t{dense.at(edges.source(e))} * k + p];
    ++counts[std::size_t{dense.at(edges.target(e))} * k + p];
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto* row = counts.data() + i * k;
    owner[i] = static_cast<PartitionId>(std::max_element(row, row + k) - row);
  }
  return owner;
}

}  // namespace

std::vector<PartitionId> assign_owners(const EdgeStream& edges, const PlacementResult& placement,
                                       std::span<const GlobalId> vertices) {
  check_placement(edges, placement);
  return owners_by_rule(edges, placement, vertices, dense_index(vertices));
}

std::vector<AgentGraphPartition> build_agent_graph(const EdgeStream& edges,
                                                   const PlacementResult& placement) {
  check_placement(edges, placement);
  const PartitionId k = placement.k;
  const auto vertices = vertex_set(edges);
  const auto dense = dense_index(vertices);
  const auto owner = owners_by_rule(edges, placement, vertices, dense);

  std::vector<std::uint32_t> src_dense(edges.size());
  std::vector<std::uint32_t> dst_dense(edges.size());
  std::vector<std::uint64_t> out_degree(vertices.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    src_dense[e] = dense.at(edges.source(e));
    dst_dense[e] = dense.at(edges.target(e));
    ++out_degree[src_dense[e]];
  }

  // Counting sort of edge ids by partition, stream order kept inside each.
  std::vector<std::size_t> bucket_begin(k + 1, 0);
  for (PartitionId p : placement.edge_partition) ++bucket_begin[p + 1];
  for (PartitionId p = 0; p < k; ++p) bucket_begin[p + 1] += bucket_begin[p];
  std::vector<std::size_t> bucket(edges.size());
  {
    std::vector<std::size_t> cursor(bucket_begin.begin(), bucket_begin.end() - 1);
    for (std::size_t e = 0; e < edges.size(); ++e) bucket[cursor[placement.edge_partition[e]]++] = e;
  }

  // S(v) and C(v) by dense vertex id, filled in ascending partition order.
  std::vector<std::vector<PartitionId>> scatter_sites(vertices.size());
  std::vector<std::vector<PartitionId>> combiner_sites(vertices.size());

  std::vector<AgentGraphPartition> parts(k);
  std::vector<LocalId> local_of(vertices.size(), kNoLocal);
  for (PartitionId i = 0; i < k; ++i) {
    AgentGraphPartition& part = parts[i];
    part.index = i;
    part.k = k;

    std::vector<std::uint32_t> masters;
    for (std::uint32_t d = 0; d < vertices.size(); ++d) {
      if (owner[d] == i) masters.push_back(d);
    }
    std::vector<std::uint32_t> scatters;
    std::vector<std::uint32_t> combiners;
    for (std::size_t b = bucket_begin[i]; b < bucket_begin[i + 1]; ++b) {
      const std::size_t e = bucket[b];
      if (owner[src_dense[e]] != i) scatters.push_back(src_dense[e]);
      if (owner[dst_dense[e]] != i) combiners.push_back(dst_dense[e]);
    }
    for (auto* group : {&scatters, &combiners}) {
      std::sort(group->begin(), group->end());
      group->erase(std::unique(group->begin(), group->end()), group->end());
    }

    part.master_count = static_cast<LocalId>(masters.size());
    part.scatter_count = static_cast<LocalId>(scatters.size());
    part.combiner_count = static_cast<LocalId>(combiners.size());
    part.local_to_global.reserve(part.local_count());
    for (std::uint32_t d : masters) part.local_to_global.push_back(vertices[d]);
    for (std::uint32_t d : scatters) {
      part.local_to_global.push_back(vertices[d]);
      part.agent_owner.push_back(owner[d]);
      scatter_sites[d].push_back(i);
    }
    for (std::uint32_t d : combiners) {
      part.local_to_global.push_back(vertices[d]);
      part.agent_owner.push_back(owner[d]);
      combiner_sites[d].push_back(i);
    }
    part.rebuild_indexes();

    part.global_out_degree.reserve(part.master_count + part.scatter_count);
    for (std::uint32_t d : masters) part.global_out_degree.push_back(out_degree[d]);
    for (std::uint32_t d : scatters) part.global_out_degree.push_back(out_degree[d]);

    // Source endpoints resolve to a master or this partition's scatter of
    // it; targets to a master or a combiner.
    LocalId next = 0;
    for (std::uint32_t d : masters) local_of[d] = next++;
    std::unordered_map<std::uint32_t, LocalId> agent_src;
    std::unordered_map<std::uint32_t, LocalId> agent_dst;
    agent_src.reserve(scatters.size());
    agent_dst.reserve(combiners.size());
    for (std::uint32_t d : scatters) agent_src.emplace(d, next++);
    for (std::uint32_t d : combiners) agent_dst.emplace(d, next++);

    std::vector<LocalEdge> local_edges;
    local_edges.reserve(bucket_begin[i + 1] - bucket_begin[i]);
    for (std::size_t b = bucket_begin[i]; b < bucket_begin[i + 1]; ++b) {
      const std::size_t e = bucket[b];
      const std::uint32_t u = src_dense[e];
      const std::uint32_t v = dst_dense[e];
      const LocalId lu = owner[u] == i ? local_of[u] : agent_src.at(u);
      const LocalId lv = owner[v] == i ? local_of[v] : agent_dst.at(v);
      local_edges.emplace_back(lu, lv);
    }
    std::vector<std::size_t> order;
    part.csr = CsrGraph::build(local_edges, part.local_count(), &order);
    if (edges.weighted()) {
      std::vector<Weight> w(order.size());
      for (std::size_t slot = 0; slot < order.size(); ++slot) {
        w[slot] = edges.weight(bucket[bucket_begin[i] + order[slot]]);
      }
      part.edge_weights = PropertyColumn<Weight>("weight", std::move(w));
    }
    for (std::uint32_t d : masters) local_of[d] = kNoLocal;
  }

  for (PartitionId i = 0; i < k; ++i) {
    AgentGraphPartition& part = parts[i];
    part.scatter_placement_offsets.assign(1, 0);
    part.combiner_presence_offsets.assign(1, 0);
    for (LocalId m = 0; m < part.master_count; ++m) {
      const std::uint32_t d = dense.at(part.local_to_global[m]);
      part.scatter_placement.insert(part.scatter_placement.end(), scatter_sites[d].begin(),
                                    scatter_sites[d].end());
      part.combiner_presence.insert(part.combiner_presence.end(), combiner_sites[d].begin(),
                                    combiner_sites[d].end());
      part.scatter_placement_offsets.push_back(part.scatter_placement.size());
      part.combiner_presence_offsets.push_back(part.combiner_presence.size());
    }
  }
  return parts;
}

namespace {

void check_structure(std::span<const AgentGraphPartition> parts, std::vector<std::string>& out) {
  const auto k = static_cast<PartitionId>(parts.size());
  auto fail = [&](PartitionId p, const std::string& msg) {
    out.push_back("partition " + std::to_string(p) + ": " + msg);
  };

  std::unordered_map<GlobalId, PartitionId> master_home;
  for (const auto& part : parts) {
    for (LocalId m = 0; m < part.master_count; ++m) {
      auto [it, inserted] = master_home.emplace(part.local_to_global[m], part.index);
      if (!inserted) {
        fail(part.index, "master " + std::to_string(part.local_to_global[m]) +
                             " also owned by partition " + std::to_string(it->second));
      }
    }
  }

  for (PartitionId i = 0; i < k; ++i) {
    const auto& part = parts[i];
    if (part.index != i) fail(i, "stored index " + std::to_string(part.index));
    if (part.k != k) fail(i, "stored k " + std::to_string(part.k));
    const LocalId n = part.local_count();
    if (part.local_to_global.size() != n || part.csr.vertex_count() != n) {
      fail(i, "local id space does not match master/scatter/combiner counts");
      continue;
    }
    if (part.master_index.size() != part.master_count ||
        part.scatter_index.size() != part.scatter_count ||
        part.combiner_index.size() != part.combiner_count) {
      fail(i, "global->local index is not a bijection per vertex kind");
    }
    for (LocalId l = 0; l < n; ++l) {
      const GlobalId g = part.local_to_global[l];
      std::optional<LocalId> back;
      switch (part.kind(l)) {
        case VertexKind::master:
          back = part.find_master(g);
          break;
        case VertexKind::scatter:
          back = part.find_scatter(g);
          break;
        case VertexKind::combiner:
          back = part.find_combiner(g);
          break;
      }
      if (back != l) fail(i, "id index round trip fails for local " + std::to_string(l));
    }
    for (LocalId m = 1; m < part.master_count; ++m) {
      if (part.local_to_global[m - 1] >= part.local_to_global[m]) {
        fail(i, "masters are not numbered in ascending global order");
        break;
      }
    }

    std::vector<std::uint64_t> in_degree(n, 0);
    for (LocalId c : part.csr.column_indices()) ++in_degree[c];
    for (LocalId l = part.master_count; l < n; ++l) {
      const GlobalId g = part.local_to_global[l];
      const PartitionId owner = part.agent_owner.at(l - part.master_count);
      if (owner >= k || owner == i) {
        fail(i, "agent " + std::to_string(l) + " has invalid owner " + std::to_string(owner));
        continue;
      }
      auto home = master_home.find(g);
      if (home == master_home.end() || home->second != owner) {
        fail(i, "agent of " + std::to_string(g) + " does not point at its master's partition");
        continue;
      }
      const auto& master_part = parts[owner];
      const LocalId ml = *master_part.find_master(g);
      if (part.kind(l) == VertexKind::scatter) {
        if (part.csr.out_degree(l) == 0) fail(i, "scatter " + std::to_string(g) + " has no out-edges");
        if (in_degree[l] != 0) fail(i, "scatter " + std::to_string(g) + " has an ordinary in-edge");
        const auto sites = master_part.scatters_of(ml);
        if (std::find(sites.begin(), sites.end(), i) == sites.end()) {
          fail(i, "scatter " + std::to_string(g) + " missing from its master's placement list");
        }
        if (part.global_out_degree.at(l) != master_part.global_out_degree.at(ml)) {
          fail(i, "scatter " + std::to_string(g) + " out-degree copy differs from master");
        }
      } else {
        if (part.csr.out_degree(l) != 0) {
          fail(i, "combiner " + std::to_string(g) + " has ordinary out-edges");
          for (LocalId t : part.csr.out_edges(l)) {
            if (part.kind(t) == VertexKind::scatter) fail(i, "combiner -> scatter edge present");
          }
        }
        if (in_degree[l] == 0) fail(i, "combiner " + std::to_string(g) + " has no in-edges");
        const auto sites = master_part.combiners_of(ml);
        if (std::find(sites.begin(), sites.end(), i) == sites.end()) {
          fail(i, "combiner " + std::to_string(g) + " missing from its master's presence list");
        }
      }
    }
    for (LocalId m = 0; m < part.master_count; ++m) {
      const GlobalId g = part.local_to_global[m];
      for (PartitionId p : part.scatters_of(m)) {
        if (p >= k || !parts[p].find_scatter(g)) {
          fail(i, "S(" + std::to_string(g) + ") lists partition without a scatter");
        }
      }
      for (PartitionId p : part.combiners_of(m)) {
        if (p >= k || !parts[p].find_combiner(g)) {
          fail(i, "C(" + std::to_string(g) + ") lists partition without a combiner");
        }
      }
    }
    if (part.weighted() && part.edge_weights->size() != part.edge_count()) {
      fail(i, "weight column length differs from edge count");
    }
  }
}

}  // namespace

std::vector<std::string> validate_agent_graph(std::span<const AgentGraphPartition> parts) {
  std::vector<std::string> out;
  check_structure(parts, out);
  return out;
}

std::vector<std::string> validate_agent_graph(std::span<const AgentGraphPartition> parts,
                                              const EdgeStream& edges) {
  std::vector<std::string> out;
  check_structure(parts, out);
  if (!out.empty()) return out;

  std::uint64_t total = 0;
  std::vector<std::pair<GlobalId, GlobalId>> stored;
  stored.reserve(edges.size());
  std::unordered_map<GlobalId, std::uint64_t> degree;
  for (const auto& part : parts) {
    total += part.edge_count();
    for (LocalId l = 0; l < part.local_count(); ++l) {
      for (LocalId t : part.csr.out_edges(l)) {
        stored.emplace_back(part.local_to_global[l], part.local_to_global[t]);
      }
      if (part.kind(l) != VertexKind::combiner) {
        degree[part.local_to_global[l]] += part.csr.out_degree(l);
      }
    }
  }
  if (total != edges.size()) {
    out.push_back("edge conservation: partitions hold " + std::to_string(total) + " edges, input has " +
                  std::to_string(edges.size()));
  }
  std::vector<std::pair<GlobalId, GlobalId>> input;
  input.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) input.emplace_back(edges.source(e), edges.target(e));
  std::sort(stored.begin(), stored.end());
  std::sort(input.begin(), input.end());
  if (stored != input) out.push_back("edge multiset differs from the input stream");

  const auto vertices = vertex_set(edges);
  std::vector<GlobalId> masters;
  for (const auto& part : parts) {
    masters.insert(masters.end(), part.local_to_global.begin(),
                   part.local_to_global.begin() + part.master_count);
  }
  std::sort(masters.begin(), masters.end());
  if (masters != vertices) out.push_back("master sets do not partition the vertex set");

  for (const auto& part : parts) {
    for (LocalId m = 0; m < part.master_count; ++m) {
      const GlobalId g = part.local_to_global[m];
      if (part.global_out_degree[m] != degree[g]) {
        out.push_back("partition " + std::to_string(part.index) + ": global out-degree of " +
                      std::to_string(g) + " is " + std::to_string(part.global_out_degree[m]) +
                      ", edges say " + std::to_string(degree[g]));
      }
    }
  }
  return out;
}

}  // namespace gre
