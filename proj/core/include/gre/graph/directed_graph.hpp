#pragma once

#include <span>
#include <vector>

#include "gre/graph/csr.hpp"
#include "gre/graph/edge_stream.hpp"
#include "gre/graph/id_index.hpp"

namespace gre {

// Whole (pre-partition) graph with both out- and in-adjacency. Vertices are
// the distinct endpoints of the edge stream, densely renumbered in ascending
// global-id order. Used by the serial reference algorithms.
class DirectedGraph {
 public:
  explicit DirectedGraph(const EdgeStream& edges);

  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return out_.edge_count(); }
  bool weighted() const noexcept { return weighted_; }

  const IdIndex& ids() const noexcept { return ids_; }

  // e_out / e_in over dense ids; the returned spans hold neighbor ids.
  std::span<const LocalId> out_neighbors(LocalId v) const { return out_.out_edges(v); }
  std::span<const LocalId> in_neighbors(LocalId v) const { return in_.out_edges(v); }

  // Weights aligned with out_neighbors(v) / in_neighbors(v).
  std::span<const Weight> out_weights(LocalId v) const;
  std::span<const Weight> in_weights(LocalId v) const;

  std::size_t out_degree(LocalId v) const { return out_.out_degree(v); }
  std::size_t in_degree(LocalId v) const { return in_.out_degree(v); }

 private:
  bool weighted_;
  IdIndex ids_;
  CsrGraph out_;
  CsrGraph in_;
  std::vector<Weight> out_weights_;
  std::vector<Weight> in_weights_;
};

// The filter operation over a vertex set: keeps matching ids in order.
template <class Rule>
std::vector<GlobalId> filter_vertices(std::span<const GlobalId> ids, Rule&& rule) {
  std::vector<GlobalId> kept;
  for (GlobalId id : ids) {
    if (rule(id)) kept.push_back(id);
  }
  return kept;
}

}  // namespace gre
