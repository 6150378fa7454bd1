#include "gre/partition/heuristic.hpp"

#include <algorithm>
#include <cmath>

#include "gre/error.hpp"
#include "gre/random.hpp"

namespace gre {

MembershipTable::MembershipTable(PartitionId k, MembershipMode mode, std::size_t expected_keys,
                                 double false_positive_rate)
    : k_(k), mode_(mode), words_per_row_((k + 63) / 64) {
  if (mode_ == MembershipMode::approximate) {
    if (!(false_positive_rate > 0.0 && false_positive_rate < 1.0)) {
      throw ParameterError("false-positive rate must be in (0, 1)");
    }
    const double n = static_cast<double>(std::max<std::size_t>(expected_keys, 64));
    const double ln2 = std::log(2.0);
    const double m = std::ceil(-n * std::log(false_positive_rate) / (ln2 * ln2));
    filter_bits_ = (static_cast<std::uint64_t>(m) + 63) / 64 * 64;
    probes_ = std::max(1U, static_cast<unsigned>(std::lround(m / n * ln2)));
    bits_.assign(static_cast<std::size_t>(k_) * (filter_bits_ / 64), 0);
  }
}

MembershipTable::Probe MembershipTable::probe(GlobalId key) const noexcept {
  Probe p;
  p.table_ = this;
  if (mode_ == MembershipMode::exact) {
    auto it = rows_.find(key);
    if (it != rows_.end()) p.row_ = bits_.data() + std::size_t{it->second} * words_per_row_;
  } else {
    p.h1_ = mix64(key);
    p.h2_ = mix64(key ^ 0x6a09e667f3bcc909ULL) | 1;
  }
  return p;
}

bool MembershipTable::Probe::test(PartitionId p) const noexcept {
  if (table_->mode_ == MembershipMode::exact) {
    return row_ != nullptr && ((row_[p / 64] >> (p % 64)) & 1U);
  }
  const std::uint64_t* filter = table_->bits_.data() + std::size_t{p} * (table_->filter_bits_ / 64);
  for (unsigned j = 0; j < table_->probes_; ++j) {
    const std::uint64_t bit = (h1_ + j * h2_) % table_->filter_bits_;
    if (((filter[bit / 64] >> (bit % 64)) & 1U) == 0) return false;
  }
  return true;
}

void MembershipTable::set(GlobalId key, PartitionId p) {
  if (mode_ == MembershipMode::exact) {
    auto [it, inserted] = rows_.try_emplace(key, static_cast<std::uint32_t>(rows_.size()));
    if (inserted) bits_.resize(bits_.size() + words_per_row_, 0);
    bits_[std::size_t{it->second} * words_per_row_ + p / 64] |= std::uint64_t{1} << (p % 64);
    return;
  }
  const std::uint64_t h1 = mix64(key);
  const std::uint64_t h2 = mix64(key ^ 0x6a09e667f3bcc909ULL) | 1;
  std::uint64_t* filter = bits_.data() + std::size_t{p} * (filter_bits_ / 64);
  for (unsigned j = 0; j < probes_; ++j) {
    const std::uint64_t bit = (h1 + j * h2) % filter_bits_;
    filter[bit / 64] |= std::uint64_t{1} << (bit % 64);
  }
}

void MembershipTable::merge(const MembershipTable& other) {
  if (other.k_ != k_) throw ParameterError("cannot merge membership tables of different k");
  if (mode_ == MembershipMode::approximate && other.mode_ == MembershipMode::exact) {
    for (const auto& [key, row] : other.rows_) {
      for (PartitionId p = 0; p < k_; ++p) {
        if ((other.bits_[std::size_t{row} * words_per_row_ + p / 64] >> (p % 64)) & 1U) set(key, p);
      }
    }
    return;
  }
  if (other.mode_ != mode_ || other.filter_bits_ != filter_bits_) {
    throw ParameterError("cannot merge membership tables of different shape");
  }
  if (mode_ == MembershipMode::exact) {
    for (const auto& [key, row] : other.rows_) {
      auto [it, inserted] = rows_.try_emplace(key, static_cast<std::uint32_t>(rows_.size()));
      if (inserted) bits_.resize(bits_.size() + words_per_row_, 0);
      for (std::size_t w = 0; w < words_per_row_; ++w) {
        bits_[std::size_t{it->second} * words_per_row_ + w] |=
            other.bits_[std::size_t{row} * words_per_row_ + w];
      }
    }
    return;
  }
  for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= other.bits_[w];
}

void MembershipTable::clear() {
  rows_.clear();
  if (mode_ == MembershipMode::exact) {
    bits_.clear();
  } else {
    std::fill(bits_.begin(), bits_.end(), 0);
  }
}

HeuristicState::HeuristicState(PartitionId k, MembershipMode mode, std::size_t expected_keys,
                               double false_positive_rate)
    : k(k),
      has_source(k, mode, expected_keys, false_positive_rate),
      has_target(k, mode, expected_keys, false_positive_rate),
      ne(k, 0) {
  if (k == 0) throw ParameterError("partition count must be >= 1");
}

std::uint64_t HeuristicState::max_load() const noexcept {
  return *std::max_element(ne.begin(), ne.end());
}

std::uint64_t HeuristicState::min_load() const noexcept {
  return *std::min_element(ne.begin(), ne.end());
}

void HeuristicState::merge(const HeuristicState& other) {
  has_source.merge(other.has_source);
  has_target.merge(other.has_target);
  for (PartitionId i = 0; i < k; ++i) ne[i] += other.ne[i];
}

void HeuristicState::clear() {
  has_source.clear();
  has_target.clear();
  std::fill(ne.begin(), ne.end(), 0);
}

namespace {

// Shared scoring loop; `load(i)` and the two membership predicates see the
// caller's view of the state.
template <class Load, class HasSource, class HasTarget>
PartitionId best_partition(PartitionId k, double delta, Load&& load, HasSource&& has_source,
                           HasTarget&& has_target) {
  std::uint64_t max = 0;
  std::uint64_t min = ~std::uint64_t{0};
  for (PartitionId i = 0; i < k; ++i) {
    max = std::max(max, load(i));
    min = std::min(min, load(i));
  }
  const double denom = delta + static_cast<double>(max - min);
  PartitionId best = 0;
  double best_score = -1.0;
  for (PartitionId i = 0; i < k; ++i) {
    const double score = (has_source(i) ? 1.0 : 0.0) + (has_target(i) ? 1.0 : 0.0) +
                         static_cast<double>(max - load(i)) / denom;
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  return best;
}

}  // namespace

PartitionId greedy_place(GlobalId u, GlobalId v, HeuristicState& state) {
  const auto src = state.has_source.probe(u);
  const auto dst = state.has_target.probe(v);
  const PartitionId best = best_partition(
      state.k, state.delta, [&](PartitionId i) { return state.ne[i]; },
      [&](PartitionId i) { return src.test(i); }, [&](PartitionId i) { return dst.test(i); });
  state.has_source.set(u, best);
  state.has_target.set(v, best);
  ++state.ne[best];
  return best;
}

PartitionId greedy_place(GlobalId u, GlobalId v, const HeuristicState& shared,
                         HeuristicState& local) {
  const auto shared_src = shared.has_source.probe(u);
  const auto shared_dst = shared.has_target.probe(v);
  const auto local_src = local.has_source.probe(u);
  const auto local_dst = local.has_target.probe(v);
  const PartitionId best = best_partition(
      shared.k, shared.delta, [&](PartitionId i) { return shared.ne[i] + local.ne[i]; },
      [&](PartitionId i) { return shared_src.test(i) || local_src.test(i); },
      [&](PartitionId i) { return shared_dst.test(i) || local_dst.test(i); });
  local.has_source.set(u, best);
  local.has_target.set(v, best);
  ++local.ne[best];
  return best;
}

PartitionId hash_place(GlobalId u, PartitionId k) noexcept {
  return static_cast<PartitionId>(mix64(u) % k);
}

}  // namespace gre
