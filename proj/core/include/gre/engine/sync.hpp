#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

#include "gre/error.hpp"
#include "gre/random.hpp"

namespace gre {

// Fixed table of striped locks; a vertex maps to stripe mix64(id) % size.
// Two vertices may share a stripe, which serializes them but never deadlocks
// because a caller holds at most one stripe at a time.
class LockTable {
 public:
  explicit LockTable(std::size_t stripes = 4096)
      : size_(stripes), locks_(std::make_unique<std::mutex[]>(stripes)) {
    if (stripes == 0) throw ParameterError("lock table needs at least one stripe");
  }

  std::mutex& stripe_for(std::uint64_t id) noexcept { return locks_[mix64(id) % size_]; }
  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t size_;
  std::unique_ptr<std::mutex[]> locks_;
};

// Runs fn(lane, begin, end) over `lanes` contiguous slices of [0, count).
// Lane 0 runs on the calling thread.
template <class Fn>
void for_lanes(unsigned lanes, std::size_t count, Fn&& fn) {
  lanes = std::max(1U, lanes);
  if (lanes == 1 || count < 2) {
    fn(0U, std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> extra;
  extra.reserve(lanes - 1);
  for (unsigned lane = 1; lane < lanes; ++lane) {
    extra.emplace_back([&, lane] { fn(lane, count * lane / lanes, count * (lane + 1) / lanes); });
  }
  fn(0U, std::size_t{0}, count / lanes);
}

// Sets a byte flag; atomic when other lanes may touch the same byte.
inline void raise_flag(std::uint8_t& flag, bool concurrent) noexcept {
  if (concurrent) {
    std::atomic_ref<std::uint8_t>(flag).store(1, std::memory_order_relaxed);
  } else {
    flag = 1;
  }
}

}  // namespace gre
