#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gre/graph/types.hpp"

namespace gre {

enum class MembershipMode {
  exact,        // hash map of per-key partition bitsets
  approximate,  // one Bloom filter per partition; false positives only
};

// Answers "does partition i already hold an edge whose source (or target) is
// key". Exact mode never errs. Approximate mode sizes each per-partition
// Bloom filter for `expected_keys` insertions at `false_positive_rate`
// (m = -n ln p / ln^2 2 bits, h = round(m/n ln 2) probes, double hashing).
class MembershipTable {
 public:
  MembershipTable() = default;
  MembershipTable(PartitionId k, MembershipMode mode = MembershipMode::exact,
                  std::size_t expected_keys = 0, double false_positive_rate = 0.01);

  // Per-key lookup result; compute once per edge, then query each partition.
  class Probe {
   public:
    bool test(PartitionId p) const noexcept;

   private:
    friend class MembershipTable;
    const MembershipTable* table_ = nullptr;
    const std::uint64_t* row_ = nullptr;
    std::uint64_t h1_ = 0;
    std::uint64_t h2_ = 0;
  };

  Probe probe(GlobalId key) const noexcept;
  bool test(GlobalId key, PartitionId p) const noexcept { return probe(key).test(p); }
  void set(GlobalId key, PartitionId p);

  // Union with a table of identical shape.
  void merge(const MembershipTable& other);
  void clear();

  PartitionId partitions() const noexcept { return k_; }
  MembershipMode mode() const noexcept { return mode_; }
  std::size_t key_count() const noexcept { return rows_.size(); }

 private:
  PartitionId k_ = 0;
  MembershipMode mode_ = MembershipMode::exact;
  std::size_t words_per_row_ = 0;
  std::unordered_map<GlobalId, std::uint32_t> rows_;
  std::vector<std::uint64_t> bits_;
  std::uint64_t filter_bits_ = 0;
  unsigned probes_ = 0;
};

// Streaming placement state for one loader.
struct HeuristicState {
  HeuristicState() = default;
  HeuristicState(PartitionId k, MembershipMode mode = MembershipMode::exact,
                 std::size_t expected_keys = 0, double false_positive_rate = 0.01);

  PartitionId k = 0;
  MembershipTable has_source;
  MembershipTable has_target;
  std::vector<std::uint64_t> ne;
  double delta = 1.0;

  std::uint64_t max_load() const noexcept;
  std::uint64_t min_load() const noexcept;

  void merge(const HeuristicState& other);
  void clear();
};

// argmax_i f(u,i) + g(v,i) + (Max - Ne(i)) / (delta + Max - Min), scored on
// the counts before this edge; ties go to the lowest index. Records the edge
// in the chosen partition.
PartitionId greedy_place(GlobalId u, GlobalId v, HeuristicState& state);

// Same score over the union of a shared snapshot and a loader-private delta;
// only `local` is updated.
PartitionId greedy_place(GlobalId u, GlobalId v, const HeuristicState& shared,
                         HeuristicState& local);

// Random vertex sharding: SplitMix64 finalizer of the source id, mod k.
PartitionId hash_place(GlobalId u, PartitionId k) noexcept;

}  // namespace gre
