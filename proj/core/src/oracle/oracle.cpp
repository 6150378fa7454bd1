#include "gre/oracle/oracle.hpp"

#include <cstdio>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>

#include "gre/error.hpp"

namespace gre::oracle {

namespace {

template <class T>
OracleResult<T> make_result(const DirectedGraph& graph, std::string algorithm) {
  OracleResult<T> r;
  r.algorithm = std::move(algorithm);
  r.ids = graph.ids().local_to_global();
  r.values.resize(r.ids.size());
  return r;
}

}  // namespace

OracleResult<double> serial_pagerank(const DirectedGraph& graph, unsigned iterations,
                                     double damping, double base, double initial) {
  auto r = make_result<double>(graph, "pagerank");
  r.parameters = {{"iterations", std::to_string(iterations)},
                  {"damping", std::to_string(damping)},
                  {"base", std::to_string(base)}};
  const std::size_t n = graph.vertex_count();
  std::vector<double> pr(n, initial);
  std::vector<double> next(n);
  for (unsigned it = 0; it < iterations; ++it) {
    for (LocalId v = 0; v < n; ++v) {
      double sum = 0.0;
      for (LocalId u : graph.in_neighbors(v)) {
        sum += pr[u] / static_cast<double>(graph.out_degree(u));
      }
      next[v] = base + damping * sum;
    }
    pr.swap(next);
  }
  r.values = std::move(pr);
  return r;
}

OracleResult<std::uint64_t> serial_dijkstra(const DirectedGraph& graph, GlobalId source) {
  auto r = make_result<std::uint64_t>(graph, "sssp");
  r.parameters = {{"source", std::to_string(source)}};
  const auto s = graph.ids().find(source);
  if (!s) throw ParameterError("source " + std::to_string(source) + " is not a vertex of the graph");
  std::vector<std::uint64_t>& dist = r.values;
  std::fill(dist.begin(), dist.end(), kUnreachable);
  using Item = std::pair<std::uint64_t, LocalId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[*s] = 0;
  queue.emplace(0, *s);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (d != dist[v]) continue;
    const auto targets = graph.out_neighbors(v);
    const auto weights = graph.out_weights(v);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const std::uint64_t w = graph.weighted() ? weights[i] : 1;
      if (d + w < dist[targets[i]]) {
        dist[targets[i]] = d + w;
        queue.emplace(d + w, targets[i]);
      }
    }
  }
  return r;
}

OracleResult<GlobalId> serial_union_find_cc(const DirectedGraph& graph) {
  auto r = make_result<GlobalId>(graph, "cc");
  const std::size_t n = graph.vertex_count();
  std::vector<LocalId> parent(n);
  std::iota(parent.begin(), parent.end(), LocalId{0});
  auto find = [&](LocalId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (LocalId v = 0; v < n; ++v) {
    for (LocalId u : graph.out_neighbors(v)) {
      LocalId a = find(u);
      LocalId b = find(v);
      // Dense ids follow global order, so the smaller root is the smaller id.
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (LocalId v = 0; v < n; ++v) r.values[v] = r.ids[find(v)];
  return r;
}

void write_csv(std::ostream& out, const std::vector<GlobalId>& ids, const std::vector<double>& values) {
  out << "global_id,value\n";
  char buf[64];
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", values[i]);
    out << ids[i] << ',' << buf << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<GlobalId>& ids,
               const std::vector<std::uint64_t>& values) {
  out << "global_id,value\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out << ids[i] << ',';
    if (values[i] == kUnreachable) {
      out << "inf";
    } else {
      out << values[i];
    }
    out << '\n';
  }
}

}  // namespace gre::oracle
