#include "gre/partition/partition_io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>

#include "gre/detail/byte_io.hpp"
#include "gre/error.hpp"

namespace gre {
namespace {

constexpr std::array<char, 8> kMagic = {'G', 'R', 'E', 'P', 'A', 'R', 'T', '\0'};
constexpr std::uint32_t kFlagWeighted = 1U << 0;
constexpr std::uint32_t kFlagSymmetrized = 1U << 1;

template <class T>
void put(std::ostream& out, const std::vector<T>& v) {
  detail::write_section<T>(out, std::span<const T>(v));
}

}  // namespace

void write_partition(std::ostream& out, const AgentGraphPartition& part) {
  out.write(kMagic.data(), kMagic.size());
  detail::write_pod<std::uint32_t>(out, kPartitionFileVersion);
  detail::write_pod<std::uint32_t>(out, part.index);
  detail::write_pod<std::uint32_t>(out, part.k);
  std::uint32_t flags = 0;
  if (part.weighted()) flags |= kFlagWeighted;
  if (part.symmetrized) flags |= kFlagSymmetrized;
  detail::write_pod<std::uint32_t>(out, flags);
  detail::write_pod<std::uint32_t>(out, part.master_count);
  detail::write_pod<std::uint32_t>(out, part.scatter_count);
  detail::write_pod<std::uint32_t>(out, part.combiner_count);
  put(out, part.local_to_global);
  put(out, part.csr.row_offsets());
  put(out, part.csr.column_indices());
  put(out, part.agent_owner);
  put(out, part.scatter_placement_offsets);
  put(out, part.scatter_placement);
  put(out, part.combiner_presence_offsets);
  put(out, part.combiner_presence);
  put(out, part.global_out_degree);
  if (part.weighted()) {
    detail::write_section<Weight>(out, part.edge_weights->items());
  } else {
    detail::write_section<Weight>(out, std::span<const Weight>());
  }
}

AgentGraphPartition read_partition(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw FormatError("not a partition file (bad magic)");
  }
  const auto version = detail::read_pod<std::uint32_t>(in);
  if (version != kPartitionFileVersion) {
    throw FormatError("unsupported partition file version " + std::to_string(version));
  }
  AgentGraphPartition part;
  part.index = detail::read_pod<std::uint32_t>(in);
  part.k = detail::read_pod<std::uint32_t>(in);
  const auto flags = detail::read_pod<std::uint32_t>(in);
  part.symmetrized = (flags & kFlagSymmetrized) != 0;
  part.master_count = detail::read_pod<std::uint32_t>(in);
  part.scatter_count = detail::read_pod<std::uint32_t>(in);
  part.combiner_count = detail::read_pod<std::uint32_t>(in);
  part.local_to_global = detail::read_section<GlobalId>(in, "local_to_global");
  auto rows = detail::read_section<std::uint64_t>(in, "row_offsets");
  auto cols = detail::read_section<LocalId>(in, "column_indices");
  part.agent_owner = detail::read_section<PartitionId>(in, "agent_owner");
  part.scatter_placement_offsets = detail::read_section<std::uint64_t>(in, "scatter_placement_offsets");
  part.scatter_placement = detail::read_section<PartitionId>(in, "scatter_placement");
  part.combiner_presence_offsets = detail::read_section<std::uint64_t>(in, "combiner_presence_offsets");
  part.combiner_presence = detail::read_section<PartitionId>(in, "combiner_presence");
  part.global_out_degree = detail::read_section<std::uint64_t>(in, "global_out_degree");
  auto weights = detail::read_section<Weight>(in, "edge_weights");

  const std::size_t n = part.local_count();
  try {
    part.csr = CsrGraph::from_arrays(std::move(rows), std::move(cols));
  } catch (const ConstructionError& e) {
    throw FormatError(std::string("partition CSR: ") + e.what());
  }
  auto offsets_ok = [&](const std::vector<std::uint64_t>& off, std::size_t items) {
    return off.size() == part.master_count + std::size_t{1} && off.front() == 0 &&
           off.back() == items && std::is_sorted(off.begin(), off.end());
  };
  if (part.local_to_global.size() != n || part.csr.vertex_count() != n ||
      part.agent_owner.size() != std::size_t{part.scatter_count} + part.combiner_count ||
      part.global_out_degree.size() != std::size_t{part.master_count} + part.scatter_count ||
      !offsets_ok(part.scatter_placement_offsets, part.scatter_placement.size()) ||
      !offsets_ok(part.combiner_presence_offsets, part.combiner_presence.size()) ||
      part.index >= part.k) {
    throw FormatError("partition file sections are inconsistent with the header counts");
  }
  if (flags & kFlagWeighted) {
    if (weights.size() != part.csr.edge_count()) {
      throw FormatError("edge weight section length differs from the edge count");
    }
    part.edge_weights = PropertyColumn<Weight>("weight", std::move(weights));
  }
  part.rebuild_indexes();
  return part;
}

void write_partition(const std::filesystem::path& path, const AgentGraphPartition& part) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write partition file " + path.string());
  write_partition(out, part);
  if (!out) throw IoError("write failed for " + path.string());
}

AgentGraphPartition read_partition(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open partition file " + path.string());
  return read_partition(in);
}

std::filesystem::path partition_file_name(const std::filesystem::path& dir, PartitionId index) {
  char name[32];
  std::snprintf(name, sizeof(name), "part-%05u.grp", index);
  return dir / name;
}

void write_partitions(const std::filesystem::path& dir, std::span<const AgentGraphPartition> parts) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  for (const auto& part : parts) write_partition(partition_file_name(dir, part.index), part);
}

std::vector<AgentGraphPartition> read_partitions(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("no partition directory " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".grp") files.push_back(entry.path());
  }
  if (files.empty()) throw IoError("no partition files in " + dir.string());
  std::sort(files.begin(), files.end());
  std::vector<AgentGraphPartition> parts;
  parts.reserve(files.size());
  for (const auto& f : files) parts.push_back(read_partition(f));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].index != i || parts[i].k != parts.size()) {
      throw FormatError("partition set in " + dir.string() + " is incomplete or mixed");
    }
  }
  return parts;
}

}  // namespace gre
