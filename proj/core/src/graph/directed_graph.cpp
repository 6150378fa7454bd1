#include "gre/graph/directed_graph.hpp"

namespace gre {

DirectedGraph::DirectedGraph(const EdgeStream& edges) : weighted_(edges.weighted()) {
  const auto vertices = vertex_set(edges);
  ids_.reserve(vertices.size());
  for (GlobalId v : vertices) ids_.add(v);

  std::vector<LocalEdge> forward(edges.size());
  std::vector<LocalEdge> backward(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const LocalId u = *ids_.find(edges.source(e));
    const LocalId v = *ids_.find(edges.target(e));
    forward[e] = {u, v};
    backward[e] = {v, u};
  }
  std::vector<std::size_t> out_order;
  std::vector<std::size_t> in_order;
  out_ = CsrGraph::build(forward, vertices.size(), &out_order);
  in_ = CsrGraph::build(backward, vertices.size(), &in_order);
  if (weighted_) {
    out_weights_.resize(edges.size());
    in_weights_.resize(edges.size());
    for (std::size_t slot = 0; slot < edges.size(); ++slot) {
      out_weights_[slot] = edges.weight(out_order[slot]);
      in_weights_[slot] = edges.weight(in_order[slot]);
    }
  }
}

std::span<const Weight> DirectedGraph::out_weights(LocalId v) const {
  if (!weighted_) return {};
  return std::span<const Weight>(out_weights_)
      .subspan(out_.row_begin(v), out_.row_end(v) - out_.row_begin(v));
}

std::span<const Weight> DirectedGraph::in_weights(LocalId v) const {
  if (!weighted_) return {};
  return std::span<const Weight>(in_weights_)
      .subspan(in_.row_begin(v), in_.row_end(v) - in_.row_begin(v));
}

}  // namespace gre
