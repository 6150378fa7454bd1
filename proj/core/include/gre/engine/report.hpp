#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gre {

struct PartitionStepCounts {
  std::uint64_t scatters = 0;           // scatter calls (one per out-edge walked)
  std::uint64_t combines = 0;           // combine calls, local and remote
  std::uint64_t applies = 0;
  std::uint64_t buffers_sent = 0;       // data buffers, round markers excluded
  std::uint64_t messages_sent = 0;      // cross-partition records
  std::uint64_t messages_received = 0;

  PartitionStepCounts& operator+=(const PartitionStepCounts& o) {
    scatters += o.scatters;
    combines += o.combines;
    applies += o.applies;
    buffers_sent += o.buffers_sent;
    messages_sent += o.messages_sent;
    messages_received += o.messages_received;
    return *this;
  }
  bool operator==(const PartitionStepCounts&) const = default;
};

struct SuperstepReport {
  std::uint64_t superstep = 0;  // 1-based index of the finished superstep
  std::vector<PartitionStepCounts> partitions;
  std::uint64_t active_scatter = 0;  // masters scatter-active after this step

  PartitionStepCounts totals() const {
    PartitionStepCounts t;
    for (const auto& p : partitions) t += p;
    return t;
  }
};

// One JSON object, no trailing newline.
std::string report_to_json_line(const SuperstepReport& report);

}  // namespace gre
