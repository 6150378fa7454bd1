#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "gre/graph/directed_graph.hpp"

// Serial reference algorithms over the whole graph. Nothing here depends on
// the partitioner or the engine.
namespace gre::oracle {

inline constexpr std::uint64_t kUnreachable = UINT64_MAX;

template <class T>
struct OracleResult {
  std::string algorithm;
  std::map<std::string, std::string> parameters;
  std::vector<GlobalId> ids;  // ascending
  std::vector<T> values;      // aligned with ids
};

// Synchronous (Jacobi) iteration from `initial` using in-edges and global
// out-degrees: pr'(v) = base + damping * sum pr(u) / outdeg(u).
OracleResult<double> serial_pagerank(const DirectedGraph& graph, unsigned iterations,
                                     double damping = 0.85, double base = 0.15,
                                     double initial = 1.0);

// Exact shortest distances; unreachable vertices hold kUnreachable. Throws
// ParameterError if the source is not a vertex of the graph.
OracleResult<std::uint64_t> serial_dijkstra(const DirectedGraph& graph, GlobalId source);

// Component label = smallest global id in the weakly connected component.
OracleResult<GlobalId> serial_union_find_cc(const DirectedGraph& graph);

// CSV with header "global_id,value". Doubles use %.17g; kUnreachable prints
// as "inf".
void write_csv(std::ostream& out, const std::vector<GlobalId>& ids, const std::vector<double>& values);
void write_csv(std::ostream& out, const std::vector<GlobalId>& ids,
               const std::vector<std::uint64_t>& values);

template <class T>
void write_csv(std::ostream& out, const OracleResult<T>& result) {
  write_csv(out, result.ids, result.values);
}

}  // namespace gre::oracle
