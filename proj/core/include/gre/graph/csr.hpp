#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gre/graph/types.hpp"

namespace gre {

using LocalEdge = std::pair<LocalId, LocalId>;

// Compressed sparse row adjacency over dense local ids.
class CsrGraph {
 public:
  CsrGraph() : row_offsets_{0} {}

  // Stable counting sort of `edges` by source. When `order` is non-null it
  // receives, for each CSR slot, the index of the input edge stored there;
  // use it to permute per-edge property columns.
  static CsrGraph build(std::span<const LocalEdge> edges, std::size_t vertex_count,
                        std::vector<std::size_t>* order = nullptr);

  // Adopts prebuilt arrays after checking every CSR invariant.
  static CsrGraph from_arrays(std::vector<std::uint64_t> row_offsets,
                              std::vector<LocalId> column_indices);

  std::size_t vertex_count() const noexcept { return row_offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return column_indices_.size(); }

  // Throws LookupError when v is out of range.
  std::span<const LocalId> out_edges(LocalId v) const;

  std::size_t out_degree(LocalId v) const {
    return static_cast<std::size_t>(row_offsets_[v + 1] - row_offsets_[v]);
  }

  // Unchecked row access for hot loops.
  std::uint64_t row_begin(LocalId v) const noexcept { return row_offsets_[v]; }
  std::uint64_t row_end(LocalId v) const noexcept { return row_offsets_[v + 1]; }
  LocalId column(std::uint64_t slot) const noexcept { return column_indices_[slot]; }

  const std::vector<std::uint64_t>& row_offsets() const noexcept { return row_offsets_; }
  const std::vector<LocalId>& column_indices() const noexcept { return column_indices_; }

  bool operator==(const CsrGraph&) const = default;

 private:
  std::vector<std::uint64_t> row_offsets_;
  std::vector<LocalId> column_indices_;
};

}  // namespace gre
