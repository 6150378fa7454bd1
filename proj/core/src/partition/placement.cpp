#include "gre/partition/placement.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "gre/error.hpp"

namespace gre {

std::string_view to_string(PlacementMode mode) {
  switch (mode) {
    case PlacementMode::greedy_oblivious:
      return "greedy-oblivious";
    case PlacementMode::greedy_coordinated:
      return "greedy-coordinated";
    case PlacementMode::hash:
      return "hash";
  }
  return "unknown";
}

PlacementMode parse_placement_mode(std::string_view name) {
  if (name == "greedy-oblivious" || name == "oblivious" || name == "gre-p") {
    return PlacementMode::greedy_oblivious;
  }
  if (name == "greedy-coordinated" || name == "coordinated" || name == "gre-s") {
    return PlacementMode::greedy_coordinated;
  }
  if (name == "hash") return PlacementMode::hash;
  throw ParameterError("unknown placement mode '" + std::string(name) + "'");
}

void validate(const PartitionConfig& config) {
  if (config.k < 1) throw ParameterError("k must be >= 1");
  if (config.loaders < 1) throw ParameterError("loaders must be >= 1");
  if (config.sync_interval < 1) throw ParameterError("sync interval must be >= 1");
  if (!(config.epsilon >= 0.0)) throw ParameterError("epsilon must be >= 0");
}

std::vector<std::uint64_t> PlacementResult::edge_counts() const {
  std::vector<std::uint64_t> counts(k, 0);
  for (PartitionId p : edge_partition) ++counts[p];
  return counts;
}

namespace {

struct Chunk {
  std::size_t begin;
  std::size_t end;
};

std::vector<Chunk> split_stream(std::size_t m, unsigned loaders) {
  std::vector<Chunk> chunks(loaders);
  for (unsigned l = 0; l < loaders; ++l) {
    chunks[l] = {m * l / loaders, m * (l + 1) / loaders};
  }
  return chunks;
}

// Bloom filters are per partition; each sees roughly its share of the keys.
std::size_t expected_keys(std::size_t edges, PartitionId k) {
  return edges / k + 1;
}

void place_oblivious(const EdgeStream& edges, const PartitionConfig& config,
                     std::vector<PartitionId>& out) {
  const auto chunks = split_stream(edges.size(), config.loaders);
  auto run = [&](const Chunk& chunk) {
    HeuristicState state(config.k, config.membership, expected_keys(chunk.end - chunk.begin, config.k),
                         config.false_positive_rate);
    for (std::size_t e = chunk.begin; e < chunk.end; ++e) {
      out[e] = greedy_place(edges.source(e), edges.target(e), state);
    }
  };
  if (chunks.size() == 1) {
    run(chunks.front());
    return;
  }
  std::vector<std::jthread> loaders;
  loaders.reserve(chunks.size());
  for (const auto& chunk : chunks) loaders.emplace_back(run, std::cref(chunk));
}

void place_coordinated(const EdgeStream& edges, const PartitionConfig& config,
                       std::vector<PartitionId>& out) {
  auto chunks = split_stream(edges.size(), config.loaders);
  HeuristicState shared(config.k, config.membership, expected_keys(edges.size(), config.k),
                        config.false_positive_rate);
  // Deltas only ever hold one round of keys, so they stay exact.
  std::vector<HeuristicState> deltas;
  deltas.reserve(chunks.size());
  for (std::size_t l = 0; l < chunks.size(); ++l) {
    deltas.emplace_back(config.k, MembershipMode::exact);
  }

  auto round = [&](std::size_t l) {
    Chunk& chunk = chunks[l];
    const std::size_t stop = std::min(chunk.end, chunk.begin + config.sync_interval);
    for (; chunk.begin < stop; ++chunk.begin) {
      const std::size_t e = chunk.begin;
      out[e] = greedy_place(edges.source(e), edges.target(e), shared, deltas[l]);
    }
  };

  auto pending = [&] {
    return std::any_of(chunks.begin(), chunks.end(),
                       [](const Chunk& c) { return c.begin < c.end; });
  };

  while (pending()) {
    if (chunks.size() == 1) {
      round(0);
    } else {
      std::vector<std::jthread> loaders;
      loaders.reserve(chunks.size());
      for (std::size_t l = 0; l < chunks.size(); ++l) loaders.emplace_back(round, l);
    }
    // Merge point: deltas are folded in loader order, then reset.
    for (auto& delta : deltas) {
      shared.merge(delta);
      delta.clear();
    }
  }
}

}  // namespace

PlacementResult partition_stream(const EdgeStream& edges, const PartitionConfig& config) {
  validate(config);
  PlacementResult result;
  result.k = config.k;
  result.edge_partition.assign(edges.size(), 0);
  if (config.mode == PlacementMode::hash) result.owner_rule = OwnerRule::hash;
  if (config.k == 1) return result;

  switch (config.mode) {
    case PlacementMode::hash:
      for (std::size_t e = 0; e < edges.size(); ++e) {
        result.edge_partition[e] = hash_place(edges.source(e), config.k);
      }
      break;
    case PlacementMode::greedy_oblivious:
      place_oblivious(edges, config, result.edge_partition);
      break;
    case PlacementMode::greedy_coordinated:
      place_coordinated(edges, config, result.edge_partition);
      break;
  }
  return result;
}

}  // namespace gre
