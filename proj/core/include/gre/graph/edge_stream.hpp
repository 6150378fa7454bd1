#pragma once

#include <cstddef>
#include <vector>

#include "gre/graph/types.hpp"

namespace gre {

// Column-oriented global-ID edge list. Weights are either present for every
// edge or for none. Self-loops and duplicates are kept (multigraph).
class EdgeStream {
 public:
  EdgeStream() = default;
  explicit EdgeStream(bool weighted) : weighted_(weighted) {}

  void add(GlobalId source, GlobalId target) {
    sources_.push_back(source);
    targets_.push_back(target);
    if (weighted_) weights_.push_back(0);
  }

  void add(GlobalId source, GlobalId target, Weight weight) {
    sources_.push_back(source);
    targets_.push_back(target);
    if (weighted_) weights_.push_back(weight);
  }

  void reserve(std::size_t n) {
    sources_.reserve(n);
    targets_.reserve(n);
    if (weighted_) weights_.reserve(n);
  }

  std::size_t size() const noexcept { return sources_.size(); }
  bool empty() const noexcept { return sources_.empty(); }
  bool weighted() const noexcept { return weighted_; }

  GlobalId source(std::size_t e) const { return sources_[e]; }
  GlobalId target(std::size_t e) const { return targets_[e]; }
  Weight weight(std::size_t e) const { return weighted_ ? weights_[e] : 1; }

  const std::vector<GlobalId>& sources() const noexcept { return sources_; }
  const std::vector<GlobalId>& targets() const noexcept { return targets_; }
  const std::vector<Weight>& weights() const noexcept { return weights_; }

  // Replaces (or installs) the weight column. Length must equal size().
  void set_weights(std::vector<Weight> weights);

  bool operator==(const EdgeStream&) const = default;

 private:
  bool weighted_ = false;
  std::vector<GlobalId> sources_;
  std::vector<GlobalId> targets_;
  std::vector<Weight> weights_;
};

// Every edge (u,v) also emitted as (v,u); self-loops are emitted once.
EdgeStream symmetrize(const EdgeStream& edges);

// Distinct endpoints in ascending order.
std::vector<GlobalId> vertex_set(const EdgeStream& edges);

}  // namespace gre
