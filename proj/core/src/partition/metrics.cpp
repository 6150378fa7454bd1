#include "gre/partition/metrics.hpp"

#include <algorithm>
#include <unordered_set>

#include <json.hpp>

#include "gre/error.hpp"

namespace gre {

PartitionMetrics compute_metrics(std::span<const AgentGraphPartition> parts,
                                 std::uint64_t vertex_count, std::uint64_t edge_count,
                                 double mean_degree, double epsilon,
                                 std::optional<PlacementMode> mode) {
  if (vertex_count == 0) throw MetricsError("metrics are undefined for an empty vertex set");
  PartitionMetrics m;
  m.k = static_cast<PartitionId>(parts.size());
  m.vertex_count = vertex_count;
  m.edge_count = edge_count;
  m.mean_degree = mean_degree;
  m.epsilon = epsilon;
  if (mode) m.mode = std::string(to_string(*mode));

  for (const auto& part : parts) {
    m.scatter_count += part.scatter_count;
    m.combiner_count += part.combiner_count;
    m.partition_edges.push_back(part.edge_count());
    // A vertex is replicated on every partition where it is a master or has
    // any agent; scatter and combiner of one vertex share a replica.
    std::unordered_set<GlobalId> agents(part.local_to_global.begin() + part.master_count,
                                        part.local_to_global.end());
    m.replicas += part.master_count + agents.size();
    for (LocalId u = 0; u < part.csr.vertex_count(); ++u) {
      const auto row = part.csr.out_edges(u);
      if (u >= part.master_count) {
        m.cut_edges += row.size();
        continue;
      }
      for (const LocalId w : row) m.cut_edges += w >= part.master_count ? 1 : 0;
    }
  }
  m.agent_count = m.scatter_count + m.combiner_count;
  const auto v = static_cast<double>(vertex_count);
  m.agent_rate = static_cast<double>(m.agent_count) / v;
  m.cut_factor = m.agent_rate;
  m.edge_cut_rate = edge_count ? static_cast<double>(m.cut_edges) / static_cast<double>(edge_count) : 0.0;
  if (mode == PlacementMode::hash) {
    m.equivalent_edge_cut_rate = m.edge_cut_rate;
  } else {
    m.equivalent_edge_cut_rate = mean_degree > 0.0 ? m.agent_rate / mean_degree : 0.0;
  }
  if (m.agent_count > 0) {
    m.scatter_share = static_cast<double>(m.scatter_count) / static_cast<double>(m.agent_count);
    m.combiner_share = static_cast<double>(m.combiner_count) / static_cast<double>(m.agent_count);
  }
  m.vertexcut_cut_factor = 2.0 * (static_cast<double>(m.replicas) - v) / v;

  if (edge_count > 0 && m.k > 0) {
    const auto max_edges = *std::max_element(m.partition_edges.begin(), m.partition_edges.end());
    const double ideal = static_cast<double>(edge_count) / m.k;
    m.edge_balance = static_cast<double>(max_edges) / ideal;
    m.balance_satisfied = static_cast<double>(max_edges) < (1.0 + epsilon) * ideal;
  } else {
    m.edge_balance = 1.0;
  }
  return m;
}

PartitionMetrics compute_metrics(std::span<const AgentGraphPartition> parts, double epsilon,
                                 std::optional<PlacementMode> mode) {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  for (const auto& part : parts) {
    vertices += part.master_count;
    edges += part.edge_count();
  }
  const double mean = vertices ? static_cast<double>(edges) / static_cast<double>(vertices) : 0.0;
  return compute_metrics(parts, vertices, edges, mean, epsilon, mode);
}

std::optional<std::string> balance_warning(const PartitionMetrics& m) {
  if (m.balance_satisfied) return std::nullopt;
  return "edge balance " + std::to_string(m.edge_balance) + " exceeds 1 + epsilon = " +
         std::to_string(1.0 + m.epsilon) + " (soft constraint, placement kept)";
}

namespace {

using nlohmann::json;

json to_json_object(const PartitionMetrics& m) {
  return json{{"k", m.k},
              {"vertex_count", m.vertex_count},
              {"edge_count", m.edge_count},
              {"mean_degree", m.mean_degree},
              {"scatter_count", m.scatter_count},
              {"combiner_count", m.combiner_count},
              {"agent_count", m.agent_count},
              {"agent_rate", m.agent_rate},
              {"equivalent_edge_cut_rate", m.equivalent_edge_cut_rate},
              {"cut_edges", m.cut_edges},
              {"edge_cut_rate", m.edge_cut_rate},
              {"mode", m.mode},
              {"cut_factor", m.cut_factor},
              {"scatter_share", m.scatter_share},
              {"combiner_share", m.combiner_share},
              {"edge_balance", m.edge_balance},
              {"epsilon", m.epsilon},
              {"balance_satisfied", m.balance_satisfied},
              {"partition_edges", m.partition_edges},
              {"replicas", m.replicas},
              {"vertexcut_cut_factor", m.vertexcut_cut_factor}};
}

}  // namespace

std::string metrics_to_json(const PartitionMetrics& m) { return to_json_object(m).dump(2); }

PartitionMetrics metrics_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    PartitionMetrics m;
    j.at("k").get_to(m.k);
    j.at("vertex_count").get_to(m.vertex_count);
    j.at("edge_count").get_to(m.edge_count);
    j.at("mean_degree").get_to(m.mean_degree);
    j.at("scatter_count").get_to(m.scatter_count);
    j.at("combiner_count").get_to(m.combiner_count);
    j.at("agent_count").get_to(m.agent_count);
    j.at("agent_rate").get_to(m.agent_rate);
    j.at("equivalent_edge_cut_rate").get_to(m.equivalent_edge_cut_rate);
    j.at("cut_edges").get_to(m.cut_edges);
    j.at("edge_cut_rate").get_to(m.edge_cut_rate);
    j.at("mode").get_to(m.mode);
    j.at("cut_factor").get_to(m.cut_factor);
    j.at("scatter_share").get_to(m.scatter_share);
    j.at("combiner_share").get_to(m.combiner_share);
    j.at("edge_balance").get_to(m.edge_balance);
    j.at("epsilon").get_to(m.epsilon);
    j.at("balance_satisfied").get_to(m.balance_satisfied);
    j.at("partition_edges").get_to(m.partition_edges);
    j.at("replicas").get_to(m.replicas);
    j.at("vertexcut_cut_factor").get_to(m.vertexcut_cut_factor);
    return m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("metrics report: ") + e.what());
  }
}

}  // namespace gre
