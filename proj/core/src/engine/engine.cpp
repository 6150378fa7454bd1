#include "gre/engine/engine.hpp"

namespace gre {

std::uint64_t topology_fingerprint(const AgentGraphPartition& part) {
  std::uint64_t h = mix64(part.k) ^ mix64(std::uint64_t{part.index} << 32);
  auto fold = [&h](std::uint64_t x) { h = mix64(h ^ x) + 0x9e3779b97f4a7c15ULL; };
  fold(part.master_count);
  fold(part.scatter_count);
  fold(part.combiner_count);
  fold(part.csr.edge_count());
  for (LocalId m = 0; m < part.master_count; ++m) fold(part.local_to_global[m]);
  return h;
}

}  // namespace gre
