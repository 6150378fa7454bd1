#pragma once

#include <filesystem>
#include <iosfwd>

#include "gre/graph/edge_stream.hpp"

namespace gre {

// Text format: one edge per line, "u v" or "u v w", separated by whitespace
// or commas. Lines starting with '#' and blank lines are skipped. A third
// column read with weighted=false must still be numeric; it is dropped.
EdgeStream read_edge_list(std::istream& in, bool weighted);
EdgeStream read_edge_list(const std::filesystem::path& path, bool weighted);

void write_edge_list(std::ostream& out, const EdgeStream& edges);
void write_edge_list(const std::filesystem::path& path, const EdgeStream& edges);

// Binary format: fixed 20-byte little-endian records
// (u64 source, u64 target, u32 weight). Unweighted streams write weight 0.
inline constexpr std::size_t kBinaryEdgeRecordSize = 20;

EdgeStream read_binary_edge_list(const std::filesystem::path& path, bool weighted);
void write_binary_edge_list(const std::filesystem::path& path, const EdgeStream& edges);

// Chooses the binary reader for ".bin" / ".edges.bin" paths, text otherwise.
EdgeStream load_edges(const std::filesystem::path& path, bool weighted);
void save_edges(const std::filesystem::path& path, const EdgeStream& edges);

}  // namespace gre
