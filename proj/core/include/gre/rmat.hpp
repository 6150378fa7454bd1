#pragma once

#include <cstdint>

#include "gre/graph/edge_stream.hpp"

namespace gre {

// Graph500 R-MAT parameters. Defaults are the Graph500 reference values.
struct RmatParams {
  int scale = 14;
  int edge_factor = 16;
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
  std::uint64_t seed = 1;
  // Applies a seeded permutation to vertex ids after generation.
  bool permute = false;
  // Generation threads; the output is identical for any value.
  unsigned threads = 1;

  std::uint64_t vertex_count() const { return std::uint64_t{1} << scale; }
  std::uint64_t edge_count() const {
    return static_cast<std::uint64_t>(edge_factor) * vertex_count();
  }
};

// Throws ParameterError unless a+b+c+d = 1 (1e-9), all probabilities are in
// [0,1], 1 <= scale <= 40 and edge_factor >= 1.
void validate(const RmatParams& p);

// Emits edge_factor * 2^scale directed edges by recursive quadrant descent.
// Draw j of edge e is counter_draw(seed, e * scale + j) (SplitMix64 counter
// stream); level j decides bit (scale-1-j) of both endpoints. Duplicates and
// self-loops are kept.
EdgeStream generate_rmat(const RmatParams& p);

// Independent uniform weights in [low, high]; weight of edge e is
// low + to_range(counter_draw(seed ^ kWeightStream, e), high - low + 1).
EdgeStream assign_weights(const EdgeStream& edges, std::uint64_t low, std::uint64_t high,
                          std::uint64_t seed);

inline constexpr std::uint64_t kWeightStream = 0x5745494748545321ULL;

}  // namespace gre
