#pragma once

#include <cstdint>
#include <limits>

namespace gre {

// User-visible vertex identity; arbitrary, not necessarily dense.
using GlobalId = std::uint64_t;
// Dense per-partition numbering: masters first, then agents.
using LocalId = std::uint32_t;
using PartitionId = std::uint32_t;
using Weight = std::uint32_t;

inline constexpr GlobalId kNoVertex = std::numeric_limits<GlobalId>::max();
inline constexpr LocalId kNoLocal = std::numeric_limits<LocalId>::max();

}  // namespace gre
