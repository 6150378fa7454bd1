#include "gre/graph/edge_stream.hpp"

#include <algorithm>

#include "gre/error.hpp"

namespace gre {

void EdgeStream::set_weights(std::vector<Weight> weights) {
  if (weights.size() != sources_.size()) {
    throw ConstructionError("weight column length " + std::to_string(weights.size()) +
                            " does not match edge count " + std::to_string(sources_.size()));
  }
  weights_ = std::move(weights);
  weighted_ = true;
}

EdgeStream symmetrize(const EdgeStream& edges) {
  EdgeStream out(edges.weighted());
  out.reserve(edges.size() * 2);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const GlobalId u = edges.source(e);
    const GlobalId v = edges.target(e);
    const Weight w = edges.weight(e);
    out.add(u, v, w);
    if (u != v) out.add(v, u, w);
  }
  return out;
}

std::vector<GlobalId> vertex_set(const EdgeStream& edges) {
  std::vector<GlobalId> ids;
  ids.reserve(edges.size() * 2);
  ids.insert(ids.end(), edges.sources().begin(), edges.sources().end());
  ids.insert(ids.end(), edges.targets().begin(), edges.targets().end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace gre
