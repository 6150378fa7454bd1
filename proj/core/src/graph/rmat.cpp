#include "gre/rmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gre/error.hpp"
#include "gre/random.hpp"

namespace gre {

void validate(const RmatParams& p) {
  if (p.scale < 1 || p.scale > 40) {
    throw ParameterError("scale must be in [1, 40], got " + std::to_string(p.scale));
  }
  if (p.edge_factor < 1) {
    throw ParameterError("edge factor must be >= 1, got " + std::to_string(p.edge_factor));
  }
  for (double q : {p.a, p.b, p.c, p.d}) {
    if (!(q >= 0.0 && q <= 1.0)) throw ParameterError("R-MAT probabilities must lie in [0, 1]");
  }
  if (std::abs(p.a + p.b + p.c + p.d - 1.0) > 1e-9) {
    throw ParameterError("R-MAT probabilities must sum to 1");
  }
}

EdgeStream generate_rmat(const RmatParams& p) {
  validate(p);
  const std::uint64_t m = p.edge_count();
  const auto levels = static_cast<std::uint64_t>(p.scale);
  const double ab = p.a + p.b;
  const double abc = ab + p.c;

  std::vector<GlobalId> src(m);
  std::vector<GlobalId> dst(m);
  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t e = begin; e < end; ++e) {
      GlobalId u = 0;
      GlobalId v = 0;
      for (std::uint64_t j = 0; j < levels; ++j) {
        const double r = to_unit(counter_draw(p.seed, e * levels + j));
        const GlobalId bit = GlobalId{1} << (levels - 1 - j);
        // Quadrants a | b over c | d: a keeps both bits clear.
        if (r >= abc) {
          u |= bit;
          v |= bit;
        } else if (r >= ab) {
          u |= bit;
        } else if (r >= p.a) {
          v |= bit;
        }
      }
      src[e] = u;
      dst[e] = v;
    }
  };

  const unsigned threads = std::max(1U, p.threads);
  if (threads == 1) {
    fill(0, m);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (m + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(m, t * chunk);
      const std::uint64_t end = std::min(m, begin + chunk);
      pool.emplace_back(fill, begin, end);
    }
  }

  if (p.permute) {
    std::vector<GlobalId> perm(p.vertex_count());
    for (std::uint64_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::mt19937_64 rng(mix64(p.seed ^ 0x5045524d55544531ULL));
    for (std::uint64_t i = perm.size() - 1; i > 0; --i) {
      std::uniform_int_distribution<std::uint64_t> pick(0, i);
      std::swap(perm[i], perm[pick(rng)]);
    }
    for (std::uint64_t e = 0; e < m; ++e) {
      src[e] = perm[src[e]];
      dst[e] = perm[dst[e]];
    }
  }

  EdgeStream edges(false);
  edges.reserve(m);
  for (std::uint64_t e = 0; e < m; ++e) edges.add(src[e], dst[e]);
  return edges;
}

EdgeStream assign_weights(const EdgeStream& edges, std::uint64_t low, std::uint64_t high,
                          std::uint64_t seed) {
  if (low > high) {
    throw ParameterError("weight range is empty: " + std::to_string(low) + " > " +
                         std::to_string(high));
  }
  if (high > std::numeric_limits<Weight>::max()) {
    throw ParameterError("weights must fit in 32 bits");
  }
  const std::uint64_t range = high - low + 1;
  std::vector<Weight> weights(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    weights[e] = static_cast<Weight>(low + to_range(counter_draw(seed ^ kWeightStream, e), range));
  }
  EdgeStream out = edges;
  out.set_weights(std::move(weights));
  return out;
}

}  // namespace gre
