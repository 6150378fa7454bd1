#include "gre/graph/csr.hpp"

#include <string>

#include "gre/error.hpp"

namespace gre {

CsrGraph CsrGraph::build(std::span<const LocalEdge> edges, std::size_t vertex_count,
                         std::vector<std::size_t>* order) {
  CsrGraph g;
  g.row_offsets_.assign(vertex_count + 1, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [src, dst] = edges[e];
    if (src >= vertex_count || dst >= vertex_count) {
      throw ConstructionError("edge " + std::to_string(e) + " (" + std::to_string(src) + "," +
                              std::to_string(dst) + ") out of range for " +
                              std::to_string(vertex_count) + " vertices");
    }
    ++g.row_offsets_[src + 1];
  }
  for (std::size_t v = 0; v < vertex_count; ++v) g.row_offsets_[v + 1] += g.row_offsets_[v];

  g.column_indices_.resize(edges.size());
  if (order) order->resize(edges.size());
  std::vector<std::uint64_t> cursor(g.row_offsets_.begin(), g.row_offsets_.end() - 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::uint64_t slot = cursor[edges[e].first]++;
    g.column_indices_[slot] = edges[e].second;
    if (order) (*order)[slot] = e;
  }
  return g;
}

CsrGraph CsrGraph::from_arrays(std::vector<std::uint64_t> row_offsets,
                               std::vector<LocalId> column_indices) {
  if (row_offsets.empty() || row_offsets.front() != 0 ||
      row_offsets.back() != column_indices.size()) {
    throw ConstructionError("CSR row offsets must start at 0 and end at the edge count");
  }
  for (std::size_t i = 1; i < row_offsets.size(); ++i) {
    if (row_offsets[i] < row_offsets[i - 1]) {
      throw ConstructionError("CSR row offsets must be non-decreasing");
    }
  }
  const std::size_t n = row_offsets.size() - 1;
  for (LocalId c : column_indices) {
    if (c >= n) throw ConstructionError("CSR column index out of range");
  }
  CsrGraph g;
  g.row_offsets_ = std::move(row_offsets);
  g.column_indices_ = std::move(column_indices);
  return g;
}

std::span<const LocalId> CsrGraph::out_edges(LocalId v) const {
  if (v >= vertex_count()) {
    throw LookupError("vertex " + std::to_string(v) + " out of range for " +
                      std::to_string(vertex_count()) + " vertices");
  }
  return std::span<const LocalId>(column_indices_).subspan(
      row_offsets_[v], row_offsets_[v + 1] - row_offsets_[v]);
}

}  // namespace gre
