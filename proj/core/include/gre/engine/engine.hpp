#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <barrier>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gre/detail/byte_io.hpp"
#include "gre/engine/message_buffer.hpp"
#include "gre/engine/program.hpp"
#include "gre/engine/report.hpp"
#include "gre/engine/sync.hpp"
#include "gre/error.hpp"
#include "gre/partition/agent_graph.hpp"
#include "gre/random.hpp"

namespace gre {

struct EngineOptions {
  std::size_t buffer_capacity = kDefaultBufferCapacity;
  std::size_t lock_table_size = 4096;
  // Execution lanes inside each partition worker.
  unsigned lanes = 1;
  // When set, every worker permutes its active vertices and received
  // messages each round with a generator seeded from this value.
  std::optional<std::uint64_t> shuffle_seed;
  // Verifies the runtime consistency rules every superstep (costs a copy of
  // the master scatter column).
  bool check_invariants = false;
};

template <class V, class S>
struct MasterInit {
  V vertex{};
  S scatter{};
  bool active = false;
};

inline constexpr std::uint16_t kRelayFormatId = 1;
inline constexpr std::uint16_t kCombineFormatId = 2;

// Checkpoint layout, little-endian:
//   "GRECKPT\0", u32 version, u64 superstep, u32 k, u64 program tag,
//   u32 sizeof(vertex_data), u32 sizeof(scatter_data), then per partition: u32 index, u32 master count,
//   u64 topology fingerprint, and length-prefixed sections vertex_data,
//   master scatter_data, active_scatter bitmap, active_apply bitmap.
// Agent state and in-flight messages are not saved.
inline constexpr std::uint32_t kCheckpointVersion = 1;

// Hash of the partition's master ids and agent/edge counts; restore refuses
// a snapshot whose fingerprint differs.
std::uint64_t topology_fingerprint(const AgentGraphPartition& part);

// Programs may name themselves with `static constexpr std::string_view
// kName`; the name is stored in checkpoints so one program cannot resume
// another's state.
template <class P>
constexpr std::uint64_t program_tag() {
  if constexpr (requires { P::kName; }) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (char c : std::string_view(P::kName)) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
    return h;
  } else {
    return 0;
  }
}

// Bulk-synchronous scatter-combine executor: one worker per partition.
//
// Each superstep runs four rounds separated by barriers:
//   1. scatter   active masters walk their out-edges, combining in place on
//                local masters and combiners, and send one relay message per
//                remote scatter agent; then assert_to_halt.
//   2. relay     scatter agents receive their master's scatter_data and walk
//                their out-edges; afterwards every combiner that received
//                anything sends one message to its master and resets.
//   3. combine   masters fold combiner messages into combine_data.
//   4. apply     apply-active masters run apply and reset combine_data.
//
// The engine keeps a view of the partitions; they must outlive it.
template <VertexProgram P>
class Engine {
 public:
  using vertex_type = typename P::vertex_data_type;
  using scatter_type = typename P::scatter_data_type;
  using combine_type = typename P::combine_data_type;
  using Init = MasterInit<vertex_type, scatter_type>;
  using Initializer = std::function<std::optional<Init>(GlobalId)>;

  // Throws InitError when `init` has no value for some master and
  // ConfigurationError when the program needs weights the graph lacks.
  Engine(std::span<const AgentGraphPartition> parts, P program, const Initializer& init,
         EngineOptions options = {})
      : Engine(parts, std::move(program), options) {
    for (auto& w : workers_) {
      const auto& part = *w->part;
      for (LocalId m = 0; m < part.master_count; ++m) {
        const GlobalId g = part.local_to_global[m];
        auto value = init(g);
        if (!value) throw InitError("no initial value for vertex " + std::to_string(g));
        vertex_ref(*w, m) = value->vertex;
        w->scatter_data[m] = value->scatter;
        w->active_scatter[m] = value->active ? 1 : 0;
      }
    }
  }

  Engine(std::span<const AgentGraphPartition> parts, P program,
         const std::unordered_map<GlobalId, Init>& init, EngineOptions options = {})
      : Engine(parts, std::move(program),
               [&init](GlobalId g) -> std::optional<Init> {
                 auto it = init.find(g);
                 if (it == init.end()) return std::nullopt;
                 return it->second;
               },
               options) {}

  Engine(Engine&&) noexcept = default;
  Engine& operator=(Engine&&) noexcept = default;

  static Engine restore(std::span<const AgentGraphPartition> parts, P program, std::istream& in,
                        EngineOptions options = {}) {
    Engine engine(parts, std::move(program), options);
    engine.load_checkpoint(in);
    return engine;
  }

  static Engine restore(std::span<const AgentGraphPartition> parts, P program,
                        const std::filesystem::path& path, EngineOptions options = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open checkpoint " + path.string());
    return restore(parts, std::move(program), in, options);
  }

  SuperstepReport run_superstep() {
    const std::size_t k = workers_.size();
    for (auto& w : workers_) w->counts = {};
    std::vector<std::exception_ptr> errors(k);
    std::atomic<bool> failed{false};

    auto guarded = [&](std::size_t w, auto&& fn) {
      if (failed.load()) return;
      try {
        fn();
      } catch (...) {
        errors[w] = std::current_exception();
        failed.store(true);
      }
    };

    auto body = [&](std::size_t w, auto&& sync) {
      std::vector<scatter_type> before;
      guarded(w, [&] {
        if (options_.check_invariants) {
          before.assign(workers_[w]->scatter_data.begin(),
                        workers_[w]->scatter_data.begin() + workers_[w]->part->master_count);
        }
        scatter_round(w);
      });
      sync();
      guarded(w, [&] {
        relay_round(w);
        if (options_.check_invariants && !combiners_at_identity(*workers_[w])) {
          throw InvariantError("combiner not reset after flush on partition " +
                               std::to_string(w));
        }
      });
      sync();
      guarded(w, [&] {
        combine_round(w);
        if (options_.check_invariants &&
            (before.size() != workers_[w]->part->master_count ||
             std::memcmp(before.data(), workers_[w]->scatter_data.data(),
                         before.size() * sizeof(scatter_type)) != 0)) {
          throw InvariantError("master scatter_data changed during scatter-combine on partition " +
                               std::to_string(w));
        }
      });
      sync();
      guarded(w, [&] { apply_round(w); });
    };

    if (k == 1) {
      body(0, [] {});
    } else {
      std::barrier<> barrier(static_cast<std::ptrdiff_t>(k));
      std::vector<std::jthread> threads;
      threads.reserve(k);
      for (std::size_t w = 0; w < k; ++w) {
        threads.emplace_back([&, w] { body(w, [&] { barrier.arrive_and_wait(); }); });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }

    ++superstep_;
    SuperstepReport report;
    report.superstep = superstep_;
    for (auto& w : workers_) report.partitions.push_back(w->counts);
    report.active_scatter = active_scatter_count();
    const auto totals = report.totals();
    if (totals.messages_sent != totals.messages_received) {
      throw InvariantError("superstep " + std::to_string(superstep_) + " sent " +
                           std::to_string(totals.messages_sent) + " messages but delivered " +
                           std::to_string(totals.messages_received));
    }
    return report;
  }

  // Runs until no master is scatter-active at the end of a superstep, or
  // until the absolute superstep index reaches `max_supersteps`. At least
  // one superstep runs unless the cap is already reached.
  std::vector<SuperstepReport> run_to_termination(
      std::optional<std::uint64_t> max_supersteps = std::nullopt,
      const std::function<void(const Engine&, const SuperstepReport&)>& after_step = {}) {
    std::vector<SuperstepReport> reports;
    while (!max_supersteps || superstep_ < *max_supersteps) {
      reports.push_back(run_superstep());
      if (after_step) after_step(*this, reports.back());
      if (reports.back().active_scatter == 0) break;
    }
    return reports;
  }

  std::uint64_t superstep() const noexcept { return superstep_; }

  std::uint64_t active_scatter_count() const {
    std::uint64_t n = 0;
    for (const auto& w : workers_) {
      n += static_cast<std::uint64_t>(std::count(w->active_scatter.begin(), w->active_scatter.end(), 1));
    }
    return n;
  }

  bool combiners_at_identity() const {
    return std::all_of(workers_.begin(), workers_.end(),
                       [&](const auto& w) { return combiners_at_identity(*w); });
  }

  // Master vertex_data sorted by global id.
  std::vector<std::pair<GlobalId, vertex_type>> results() const {
    std::vector<std::pair<GlobalId, vertex_type>> out;
    for (const auto& w : workers_) {
      for (LocalId m = 0; m < w->part->master_count; ++m) {
        out.emplace_back(w->part->local_to_global[m], vertex_ref(*w, m));
      }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  const P& program() const noexcept { return program_; }
  const EngineOptions& options() const noexcept { return options_; }

  void checkpoint(std::ostream& out) const {
    static constexpr std::array<char, 8> magic = {'G', 'R', 'E', 'C', 'K', 'P', 'T', '\0'};
    out.write(magic.data(), magic.size());
    detail::write_pod<std::uint32_t>(out, kCheckpointVersion);
    detail::write_pod<std::uint64_t>(out, superstep_);
    detail::write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(workers_.size()));
    detail::write_pod<std::uint64_t>(out, program_tag<P>());
    detail::write_pod<std::uint32_t>(out, sizeof(vertex_type));
    detail::write_pod<std::uint32_t>(out, sizeof(scatter_type));
    for (const auto& w : workers_) {
      const auto& part = *w->part;
      const LocalId n = part.master_count;
      detail::write_pod<std::uint32_t>(out, part.index);
      detail::write_pod<std::uint32_t>(out, n);
      detail::write_pod<std::uint64_t>(out, topology_fingerprint(part));
      std::vector<vertex_type> vertices(n);
      for (LocalId m = 0; m < n; ++m) vertices[m] = vertex_ref(*w, m);
      detail::write_section<vertex_type>(out, vertices);
      detail::write_section<scatter_type>(out, std::span(w->scatter_data).first(n));
      detail::write_section<std::uint64_t>(out, pack_bits(w->active_scatter));
      detail::write_section<std::uint64_t>(out, pack_bits(w->active_apply));
    }
    if (!out) throw IoError("checkpoint write failed");
  }

  void checkpoint(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write checkpoint " + path.string());
    checkpoint(out);
  }

 private:
  struct InboxSlot {
    std::mutex mutex;
    std::vector<std::vector<std::byte>> buffers;
  };

  struct Worker {
    Worker(const AgentGraphPartition& p, std::size_t k, std::size_t stripes)
        : part(&p), locks(stripes), inbox(std::make_unique<InboxSlot[]>(2 * k)) {}

    const AgentGraphPartition* part;
    std::vector<vertex_type> vertex_data;    // masters; unused when aliased
    std::vector<scatter_type> scatter_data;  // masters, then scatter agents
    std::vector<combine_type> combine_data;  // every local id; agents' slots used by combiners
    std::vector<std::uint8_t> active_scatter;
    std::vector<std::uint8_t> active_apply;
    std::vector<std::uint8_t> touched;       // combiner received a message this superstep
    LockTable locks;
    // One slot per (channel, sender). Relays travel on channel 0 and
    // combines on channel 1, so a fast peer cannot mix the two rounds.
    std::unique_ptr<InboxSlot[]> inbox;
    PartitionStepCounts counts;
  };

  struct Lane {
    PartitionStepCounts counts;
    std::vector<BufferBuilder> out;
  };

  Engine(std::span<const AgentGraphPartition> parts, P program, EngineOptions options)
      : parts_(parts), program_(std::move(program)), options_(options) {
    if (parts_.empty()) throw ConfigurationError("engine needs at least one partition");
    const std::size_t k = parts_.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (parts_[i].index != i || parts_[i].k != k) {
        throw ConfigurationError("partition " + std::to_string(i) + " is out of order or from a " +
                                 "different partitioning");
      }
      if constexpr (P::kNeedsWeights) {
        if (!parts_[i].weighted()) {
          throw ConfigurationError("program requires edge weights but the graph is unweighted");
        }
      }
    }
    if (relay_format().capacity(options_.buffer_capacity) == 0 ||
        combine_format().capacity(options_.buffer_capacity) == 0) {
      throw ParameterError("buffer capacity " + std::to_string(options_.buffer_capacity) +
                           " cannot hold a single message");
    }
    options_.lanes = std::max(1U, options_.lanes);
    const combine_type identity = program_.combine_identity();
    workers_.reserve(k);
    for (const auto& part : parts_) {
      auto w = std::make_unique<Worker>(part, k, options_.lock_table_size);
      if constexpr (!P::kAliasVertexScatter) w->vertex_data.resize(part.master_count);
      w->scatter_data.resize(std::size_t{part.master_count} + part.scatter_count);
      w->combine_data.assign(part.local_count(), identity);
      w->active_scatter.assign(part.master_count, 0);
      w->active_apply.assign(part.master_count, 0);
      w->touched.assign(part.local_count(), 0);
      workers_.push_back(std::move(w));
    }
  }

  static MessageFormat relay_format() { return {kRelayFormatId, sizeof(scatter_type)}; }
  static MessageFormat combine_format() { return {kCombineFormatId, sizeof(combine_type)}; }

  static vertex_type& vertex_ref(Worker& w, LocalId m) {
    if constexpr (P::kAliasVertexScatter) {
      return w.scatter_data[m];
    } else {
      return w.vertex_data[m];
    }
  }
  static const vertex_type& vertex_ref(const Worker& w, LocalId m) {
    if constexpr (P::kAliasVertexScatter) {
      return w.scatter_data[m];
    } else {
      return w.vertex_data[m];
    }
  }

  bool combiners_at_identity(const Worker& w) const {
    const combine_type identity = program_.combine_identity();
    const auto& part = *w.part;
    for (LocalId c = part.master_count + part.scatter_count; c < part.local_count(); ++c) {
      if (w.touched[c] || std::memcmp(&w.combine_data[c], &identity, sizeof(combine_type)) != 0) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::mt19937_64> round_rng(std::size_t w, unsigned round) const {
    if (!options_.shuffle_seed) return std::nullopt;
    const std::uint64_t counter = (superstep_ << 24) ^ (std::uint64_t{w} << 4) ^ round;
    return std::mt19937_64(counter_draw(*options_.shuffle_seed, counter));
  }

  std::vector<Lane> make_lanes(std::uint8_t op_code, MessageFormat format) const {
    std::vector<Lane> lanes(options_.lanes);
    for (auto& lane : lanes) {
      lane.out.reserve(workers_.size());
      for (std::size_t p = 0; p < workers_.size(); ++p) {
        lane.out.emplace_back(op_code, format, options_.buffer_capacity);
      }
    }
    return lanes;
  }

  InboxSlot& slot(std::size_t to, std::size_t from, std::size_t channel) {
    return workers_[to]->inbox[channel * workers_.size() + from];
  }

  auto sink(std::size_t from, std::size_t to, Lane& lane, std::size_t channel) {
    return [this, from, to, &lane, channel](std::vector<std::byte>&& buffer) {
      ++lane.counts.buffers_sent;
      InboxSlot& slot = this->slot(to, from, channel);
      std::lock_guard guard(slot.mutex);
      slot.buffers.push_back(std::move(buffer));
    };
  }

  void finish_send(std::size_t w, std::vector<Lane>& lanes, std::size_t channel) {
    for (auto& lane : lanes) {
      for (std::size_t p = 0; p < workers_.size(); ++p) lane.out[p].flush(sink(w, p, lane, channel));
      workers_[w]->counts += lane.counts;
    }
    // Header-only marker closes the round towards every peer.
    for (std::size_t p = 0; p < workers_.size(); ++p) {
      if (p == w) continue;
      std::vector<std::byte> marker(kHeaderBytes);
      encode_header({op::kEndOfRound, 0, 0, 0}, std::span<std::byte, kHeaderBytes>(marker.data(), kHeaderBytes));
      InboxSlot& target = slot(p, w, channel);
      std::lock_guard guard(target.mutex);
      target.buffers.push_back(std::move(marker));
    }
  }

  // Drains the inbox in sender order, checking every peer closed the round.
  template <class T>
  std::vector<Message<T>> receive(std::size_t w, std::uint8_t expected_op, MessageFormat format,
                                  std::size_t channel) {
    Worker& me = *workers_[w];
    std::vector<Message<T>> messages;
    for (std::size_t from = 0; from < workers_.size(); ++from) {
      if (from == w) continue;
      auto& in = slot(w, from, channel);
      std::size_t markers = 0;
      for (const auto& buffer : in.buffers) {
        const BufferHeader h = decode_header(buffer);
        if (h.op == op::kEndOfRound) {
          ++markers;
          continue;
        }
        if (h.op != expected_op || h.format_id != format.id) {
          throw FormatError("unexpected buffer (op " + std::to_string(h.op) + ", format " +
                            std::to_string(h.format_id) + ") on partition " + std::to_string(w));
        }
        auto unpacked = unpack_buffer<T>(buffer);
        messages.insert(messages.end(), unpacked.messages.begin(), unpacked.messages.end());
      }
      in.buffers.clear();
      if (markers != 1) {
        throw InvariantError("partition " + std::to_string(w) + " saw " + std::to_string(markers) +
                             " round markers from partition " + std::to_string(from));
      }
    }
    me.counts.messages_received += messages.size();
    return messages;
  }

  void local_combine(Worker& w, LocalId target, const combine_type& payload, bool concurrent) {
    if (concurrent) {
      std::lock_guard guard(w.locks.stripe_for(target));
      w.combine_data[target] = program_.combine(w.combine_data[target], payload);
    } else {
      w.combine_data[target] = program_.combine(w.combine_data[target], payload);
    }
    if (target < w.part->master_count) {
      if constexpr (P::kCombineActivatesApply) raise_flag(w.active_apply[target], concurrent);
    } else {
      raise_flag(w.touched[target], concurrent);
    }
  }

  void scatter_edges(Worker& w, LocalId source, PartitionStepCounts& counts, bool concurrent) {
    const auto& part = *w.part;
    EdgeContext edge{1, part.local_to_global[source], part.global_out_degree[source]};
    const scatter_type& data = w.scatter_data[source];
    const std::uint64_t end = part.csr.row_end(source);
    for (std::uint64_t slot = part.csr.row_begin(source); slot < end; ++slot) {
      if (part.edge_weights) edge.weight = (*part.edge_weights)[slot];
      local_combine(w, part.csr.column(slot), program_.scatter(data, edge), concurrent);
    }
    counts.scatters += end - part.csr.row_begin(source);
    counts.combines += end - part.csr.row_begin(source);
  }

  void scatter_round(std::size_t wi) {
    Worker& w = *workers_[wi];
    const auto& part = *w.part;
    std::vector<LocalId> active;
    for (LocalId m = 0; m < part.master_count; ++m) {
      if (w.active_scatter[m]) active.push_back(m);
    }
    if (auto rng = round_rng(wi, 0)) std::shuffle(active.begin(), active.end(), *rng);

    auto lanes = make_lanes(op::kRelay, relay_format());
    const bool concurrent = options_.lanes > 1;
    for_lanes(options_.lanes, active.size(), [&](unsigned l, std::size_t begin, std::size_t end) {
      Lane& lane = lanes[l];
      for (std::size_t i = begin; i < end; ++i) {
        const LocalId m = active[i];
        scatter_edges(w, m, lane.counts, concurrent);
        for (PartitionId p : part.scatters_of(m)) {
          lane.out[p].append(part.local_to_global[m], w.scatter_data[m], sink(wi, p, lane, 0));
          ++lane.counts.messages_sent;
        }
        if (!program_.assert_to_halt()) w.active_scatter[m] = 0;
      }
    });
    finish_send(wi, lanes, 0);
  }

  void relay_round(std::size_t wi) {
    Worker& w = *workers_[wi];
    const auto& part = *w.part;
    auto messages = receive<scatter_type>(wi, op::kRelay, relay_format(), 0);
    if (auto rng = round_rng(wi, 1)) std::shuffle(messages.begin(), messages.end(), *rng);

    std::vector<Lane> scratch(options_.lanes);
    const bool concurrent = options_.lanes > 1;
    for_lanes(options_.lanes, messages.size(), [&](unsigned l, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto agent = part.find_scatter(messages[i].dest);
        if (!agent) {
          throw RoutingError("partition " + std::to_string(wi) + " holds no scatter agent for " +
                             std::to_string(messages[i].dest));
        }
        w.scatter_data[*agent] = messages[i].data;
        scatter_edges(w, *agent, scratch[l].counts, concurrent);
      }
    });
    for (const auto& lane : scratch) w.counts += lane.counts;

    std::vector<LocalId> ready;
    for (LocalId c = part.master_count + part.scatter_count; c < part.local_count(); ++c) {
      if (w.touched[c]) ready.push_back(c);
    }
    if (auto rng = round_rng(wi, 2)) std::shuffle(ready.begin(), ready.end(), *rng);
    auto lanes = make_lanes(op::kCombine, combine_format());
    const combine_type identity = program_.combine_identity();
    for (LocalId c : ready) {
      const PartitionId owner = part.agent_owner[c - part.master_count];
      lanes[0].out[owner].append(part.local_to_global[c], w.combine_data[c], sink(wi, owner, lanes[0], 1));
      ++lanes[0].counts.messages_sent;
      w.combine_data[c] = identity;
      w.touched[c] = 0;
    }
    finish_send(wi, lanes, 1);
  }

  void combine_round(std::size_t wi) {
    Worker& w = *workers_[wi];
    const auto& part = *w.part;
    auto messages = receive<combine_type>(wi, op::kCombine, combine_format(), 1);
    if (auto rng = round_rng(wi, 3)) std::shuffle(messages.begin(), messages.end(), *rng);
    const bool concurrent = options_.lanes > 1;
    for_lanes(options_.lanes, messages.size(), [&](unsigned, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto master = part.find_master(messages[i].dest);
        if (!master) {
          throw RoutingError("partition " + std::to_string(wi) + " does not own vertex " +
                             std::to_string(messages[i].dest));
        }
        local_combine(w, *master, messages[i].data, concurrent);
      }
    });
    w.counts.combines += messages.size();
  }

  void apply_round(std::size_t wi) {
    Worker& w = *workers_[wi];
    const auto& part = *w.part;
    const combine_type identity = program_.combine_identity();
    std::vector<PartitionStepCounts> lane_counts(options_.lanes);
    for_lanes(options_.lanes, part.master_count, [&](unsigned l, std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto m = static_cast<LocalId>(i);
        if (!P::kApplyAll && !w.active_apply[m]) continue;
        const bool scatter_next = program_.apply(vertex_ref(w, m), w.scatter_data[m], w.combine_data[m]);
        w.combine_data[m] = identity;
        w.active_apply[m] = 0;
        if (scatter_next) w.active_scatter[m] = 1;
        ++lane_counts[l].applies;
      }
    });
    for (const auto& c : lane_counts) w.counts += c;
  }

  static std::vector<std::uint64_t> pack_bits(const std::vector<std::uint8_t>& flags) {
    std::vector<std::uint64_t> words((flags.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (flags[i]) words[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return words;
  }

  static void unpack_bits(const std::vector<std::uint64_t>& words, std::vector<std::uint8_t>& flags) {
    if (words.size() != (flags.size() + 63) / 64) {
      throw CompatibilityError("activation bitmap length does not match the partition");
    }
    for (std::size_t i = 0; i < flags.size(); ++i) flags[i] = (words[i / 64] >> (i % 64)) & 1U;
  }

  void load_checkpoint(std::istream& in) {
    std::array<char, 8> magic{};
    if (!in.read(magic.data(), magic.size()) ||
        std::string_view(magic.data(), 7) != std::string_view("GRECKPT")) {
      throw FormatError("not a checkpoint file (bad magic)");
    }
    if (detail::read_pod<std::uint32_t>(in) != kCheckpointVersion) {
      throw FormatError("unsupported checkpoint version");
    }
    const auto superstep = detail::read_pod<std::uint64_t>(in);
    const auto k = detail::read_pod<std::uint32_t>(in);
    if (k != workers_.size()) {
      throw CompatibilityError("checkpoint has " + std::to_string(k) + " partitions, graph has " +
                               std::to_string(workers_.size()));
    }
    if (detail::read_pod<std::uint64_t>(in) != program_tag<P>() ||
        detail::read_pod<std::uint32_t>(in) != sizeof(vertex_type) ||
        detail::read_pod<std::uint32_t>(in) != sizeof(scatter_type)) {
      throw CompatibilityError("checkpoint was written by a program with different state types");
    }
    for (auto& w : workers_) {
      const auto& part = *w->part;
      const auto index = detail::read_pod<std::uint32_t>(in);
      const auto n = detail::read_pod<std::uint32_t>(in);
      const auto fingerprint = detail::read_pod<std::uint64_t>(in);
      if (index != part.index || n != part.master_count || fingerprint != topology_fingerprint(part)) {
        throw CompatibilityError("checkpoint topology differs for partition " +
                                 std::to_string(part.index));
      }
      auto vertices = detail::read_section<vertex_type>(in, "vertex_data");
      auto scatters = detail::read_section<scatter_type>(in, "scatter_data");
      if (vertices.size() != n || scatters.size() != n) {
        throw CompatibilityError("checkpoint state column length differs for partition " +
                                 std::to_string(part.index));
      }
      std::copy(scatters.begin(), scatters.end(), w->scatter_data.begin());
      for (LocalId m = 0; m < n; ++m) vertex_ref(*w, m) = vertices[m];
      unpack_bits(detail::read_section<std::uint64_t>(in, "active_scatter"), w->active_scatter);
      unpack_bits(detail::read_section<std::uint64_t>(in, "active_apply"), w->active_apply);
    }
    superstep_ = superstep;
  }

  std::span<const AgentGraphPartition> parts_;
  P program_;
  EngineOptions options_;
  std::vector<std::unique_ptr<Worker>> workers_;
  std::uint64_t superstep_ = 0;
};

}  // namespace gre
