#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "gre/engine/engine.hpp"
#include "gre/error.hpp"
#include "gre/programs.hpp"
#include "test_graphs.hpp"

namespace gre {
namespace {

template <class T>
std::map<GlobalId, T> as_map(const std::vector<std::pair<GlobalId, T>>& v) {
  return {v.begin(), v.end()};
}

template <class P, class Init>
auto run(const std::vector<AgentGraphPartition>& parts, P program, Init init,
         std::optional<std::uint64_t> cap = std::nullopt, EngineOptions options = {}) {
  Engine<P> engine(parts, program, init, options);
  auto reports = engine.run_to_termination(cap);
  return std::make_pair(engine.results(), reports);
}

// Counts in-edges: exercises concurrent combines into one vertex.
struct InDegree {
  using vertex_data_type = std::uint64_t;
  using scatter_data_type = std::uint64_t;
  using combine_data_type = std::uint64_t;
  static constexpr bool kCombineActivatesApply = true;
  static constexpr bool kApplyAll = false;
  static constexpr bool kAliasVertexScatter = false;
  static constexpr bool kNeedsWeights = false;

  std::uint64_t scatter(const std::uint64_t&, const EdgeContext&) const { return 1; }
  std::uint64_t combine(const std::uint64_t& a, const std::uint64_t& b) const { return a + b; }
  std::uint64_t combine_identity() const { return 0; }
  bool apply(std::uint64_t& v, std::uint64_t&, const std::uint64_t& sum) const {
    v = sum;
    return false;
  }
  bool assert_to_halt() const { return false; }
};
static_assert(VertexProgram<InDegree>);
static_assert(VertexProgram<PageRank>);
static_assert(VertexProgram<Sssp>);
static_assert(VertexProgram<Cc>);

TEST(PageRankProgram, VertexWithoutInEdgesGetsBase) {
  const auto parts = test::partition(test::edges_of({{0, 1}}), 1);
  const auto [res, reports] = run(parts, PageRank(), pagerank_init(), 1);
  EXPECT_DOUBLE_EQ(res[0].second, 0.15);
  EXPECT_DOUBLE_EQ(res[1].second, 1.0);
  EXPECT_EQ(reports.size(), 1U);
}

TEST(PageRankProgram, TwoCycleConvergesToOne) {
  const auto e = test::edges_of({{3, 8}, {8, 3}});
  for (PartitionId k : {1U, 2U}) {
    auto parts = build_agent_graph(e, test::placement_of(k, {0, k - 1}));
    const auto [fixed, r1] = run(parts, PageRank(), pagerank_init(1.0), 5);
    for (const auto& [g, pr] : fixed) EXPECT_DOUBLE_EQ(pr, 1.0);
    const auto [from_half, r2] = run(parts, PageRank(), pagerank_init(0.5), 200);
    for (const auto& [g, pr] : from_half) EXPECT_NEAR(pr, 1.0, 1e-12);
  }
}

TEST(PageRankProgram, RunsExactlyTheCap) {
  const auto parts = test::partition(test::random_edges(50, 200, 1), 3);
  const auto [res, reports] = run(parts, PageRank(), pagerank_init(), 50);
  EXPECT_EQ(reports.size(), 50U);
  EXPECT_EQ(reports.back().superstep, 50U);
  for (const auto& [g, pr] : res) EXPECT_GE(pr, 0.15);
}

TEST(PageRankProgram, RejectsBadDamping) {
  EXPECT_THROW(PageRank(0.0), ParameterError);
  EXPECT_THROW(PageRank(1.0), ParameterError);
  EXPECT_NO_THROW(PageRank(0.5));
}

TEST(SsspProgram, ChainTerminatesAfterThreeSupersteps) {
  const auto e = test::weighted_edges_of({{0, 1, 2}, {1, 2, 3}});
  for (PartitionId k : {1U, 2U, 3U}) {
    const auto parts = build_agent_graph(e, test::placement_of(k, {0, k - 1}));
    const auto [res, reports] = run(parts, Sssp(0), sssp_init(0));
    ASSERT_EQ(res.size(), 3U);
    EXPECT_EQ(res[0].second.distance, 0U);
    EXPECT_EQ(res[1].second.distance, 2U);
    EXPECT_EQ(res[2].second.distance, 5U);
    EXPECT_EQ(res[2].second.predecessor, 1U);
    EXPECT_EQ(res[0].second.predecessor, kNoVertex);
    EXPECT_EQ(reports.size(), 3U) << "k=" << k;
  }
}

TEST(SsspProgram, UnreachableKeepsSentinel) {
  const auto e = test::weighted_edges_of({{0, 1, 4}, {5, 0, 1}});
  const auto [res, reports] = run(test::partition(e, 2), Sssp(0), sssp_init(0));
  const auto m = as_map(res);
  EXPECT_EQ(m.at(5).distance, kInfiniteDistance);
  EXPECT_EQ(m.at(1).distance, 4U);
}

TEST(SsspProgram, PredecessorTiesGoToSmallerId) {
  const auto e = test::weighted_edges_of({{0, 7, 1}, {0, 3, 1}, {7, 9, 1}, {3, 9, 1}});
  const auto [res, reports] = run(test::partition(e, 3), Sssp(0), sssp_init(0));
  EXPECT_EQ(as_map(res).at(9).predecessor, 3U);
  const auto [plain, r2] = run(test::partition(e, 3), Sssp(0, false), sssp_init(0));
  EXPECT_EQ(as_map(plain).at(9).predecessor, kNoVertex);
  EXPECT_EQ(as_map(plain).at(9).distance, 2U);
}

TEST(SsspProgram, SaturatingAdd) {
  EXPECT_EQ(saturating_add(kInfiniteDistance, 5), kInfiniteDistance);
  EXPECT_EQ(saturating_add(kInfiniteDistance - 2, 5), kInfiniteDistance);
  EXPECT_EQ(saturating_add(3, 5), 8U);
}

TEST(SsspProgram, UnweightedGraphIsAConfigurationError) {
  const auto parts = test::partition(test::edges_of({{0, 1}}), 1);
  EXPECT_THROW(Engine<Sssp>(parts, Sssp(0), sssp_init(0)), ConfigurationError);
}

TEST(CcProgram, SingleVertexKeepsOwnLabel) {
  const auto [res, reports] = run(test::partition(test::edges_of({{5, 5}}), 1), Cc{}, cc_init());
  ASSERT_EQ(res.size(), 1U);
  EXPECT_EQ(res[0].second, 5U);
}

TEST(CcProgram, DisjointTriangles) {
  const auto e = symmetrize(test::edges_of({{1, 2}, {2, 3}, {3, 1}, {7, 8}, {8, 9}, {9, 7}}));
  for (PartitionId k : {1U, 2U, 4U}) {
    const auto [res, reports] = run(test::partition(e, k), Cc{}, cc_init());
    for (const auto& [g, label] : res) EXPECT_EQ(label, g < 7 ? 1U : 7U);
  }
}

TEST(CcProgram, PathConvergesWithinNSupersteps) {
  const std::size_t n = 12;
  EdgeStream e;
  for (GlobalId v = n; v > 1; --v) e.add(v * 10, (v - 1) * 10);
  const auto [res, reports] = run(test::partition(symmetrize(e), 3), Cc{}, cc_init());
  for (const auto& [g, label] : res) EXPECT_EQ(label, 10U);
  EXPECT_LE(reports.size(), n);
}

TEST(Engine, CombinerSendsOneMessageForThreeEdges) {
  const auto e = test::edges_of({{1, 9}, {2, 9}, {3, 9}, {9, 9}, {9, 9}});
  const auto parts = build_agent_graph(e, test::placement_of(2, {0, 0, 0, 1, 1}));
  Engine<Cc> engine(parts, Cc{}, cc_init());
  const auto report = engine.run_superstep();
  EXPECT_EQ(report.totals().messages_sent, 1U);
  EXPECT_EQ(report.partitions[0].messages_sent, 1U);
  EXPECT_EQ(report.partitions[1].messages_received, 1U);
}

TEST(Engine, ScatterAgentReceivesOneMessageForThreeEdges) {
  const auto e = test::edges_of({{9, 1}, {9, 2}, {9, 3}, {9, 9}, {9, 9}});
  const auto parts = build_agent_graph(e, test::placement_of(2, {0, 0, 0, 1, 1}));
  Engine<Cc> engine(parts, Cc{}, [](GlobalId g) -> std::optional<MasterInit<GlobalId, GlobalId>> {
    return MasterInit<GlobalId, GlobalId>{g, g, g == 9};
  });
  const auto report = engine.run_superstep();
  EXPECT_EQ(report.totals().messages_sent, 1U);
  EXPECT_EQ(report.partitions[1].messages_sent, 1U);
  EXPECT_EQ(report.partitions[0].scatters, 3U);
}

TEST(Engine, EmptyActiveSetStopsAfterOneSuperstep) {
  const auto parts = test::partition(test::random_edges(30, 100, 2), 3);
  const auto [res, reports] =
      run(parts, Cc{}, [](GlobalId g) -> std::optional<MasterInit<GlobalId, GlobalId>> {
        return MasterInit<GlobalId, GlobalId>{g, g, false};
      });
  ASSERT_EQ(reports.size(), 1U);
  EXPECT_EQ(reports[0].totals().messages_sent, 0U);
  EXPECT_EQ(reports[0].totals().scatters, 0U);
}

TEST(Engine, MissingInitialValueIsAnInitError) {
  const auto parts = test::partition(test::edges_of({{1, 2}}), 1);
  std::unordered_map<GlobalId, MasterInit<GlobalId, GlobalId>> init = {{1, {1, 1, true}}};
  EXPECT_THROW(Engine<Cc>(parts, Cc{}, init), InitError);
  init[2] = {2, 2, true};
  EXPECT_NO_THROW(Engine<Cc>(parts, Cc{}, init));
}

TEST(Engine, RejectsMisorderedPartitionsAndTinyBuffers) {
  auto parts = test::partition(test::random_edges(20, 60, 3), 2);
  EngineOptions tiny;
  tiny.buffer_capacity = 12;
  EXPECT_THROW(Engine<Cc>(parts, Cc{}, cc_init(), tiny), ParameterError);
  std::swap(parts[0], parts[1]);
  EXPECT_THROW(Engine<Cc>(parts, Cc{}, cc_init()), ConfigurationError);
  EXPECT_THROW(Engine<Cc>(std::span<const AgentGraphPartition>{}, Cc{}, cc_init()), ConfigurationError);
}

TEST(Engine, UnknownDestinationIsARoutingError) {
  const auto e = test::edges_of({{9, 1}, {9, 2}, {9, 3}, {9, 9}, {9, 9}});
  auto parts = build_agent_graph(e, test::placement_of(2, {0, 0, 0, 1, 1}));
  parts[0].scatter_index.clear();
  Engine<Cc> engine(parts, Cc{}, cc_init());
  EXPECT_THROW(engine.run_superstep(), RoutingError);
}

TEST(Engine, ConcurrentLanesMatchSequentialFold) {
  EdgeStream e;
  for (GlobalId u = 1; u <= 3000; ++u) e.add(u, 0);
  for (GlobalId u = 1; u <= 3000; ++u) e.add(u, 1 + u % 5);
  for (PartitionId k : {1U, 3U}) {
    const auto parts = test::partition(e, k);
    EngineOptions opt;
    opt.lanes = 4;
    opt.lock_table_size = 3;
    const auto init = [](GlobalId) -> std::optional<MasterInit<std::uint64_t, std::uint64_t>> {
      return MasterInit<std::uint64_t, std::uint64_t>{0, 0, true};
    };
    const auto [res, reports] = run(parts, InDegree{}, init, std::nullopt, opt);
    const auto m = as_map(res);
    EXPECT_EQ(m.at(0), 3000U);
    for (GlobalId v = 1; v <= 5; ++v) EXPECT_EQ(m.at(v), 600U);
  }
}

TEST(Engine, ResultsIndependentOfKLanesBuffersAndShuffle) {
  const auto e = test::random_edges(300, 3000, 17, true);
  const auto sym = symmetrize(e);
  const auto [sssp_ref, r1] = run(test::partition(e, 1), Sssp(0), sssp_init(0));
  const auto [cc_ref, r2] = run(test::partition(sym, 1), Cc{}, cc_init());
  const auto [pr_ref, r3] = run(test::partition(e, 1), PageRank(), pagerank_init(), 30);
  for (PartitionId k : {2U, 5U}) {
    for (unsigned lanes : {1U, 3U}) {
      EngineOptions opt;
      opt.lanes = lanes;
      opt.buffer_capacity = 8 + 3 * 24;
      opt.shuffle_seed = k * 31 + lanes;
      opt.check_invariants = true;
      EXPECT_EQ(run(test::partition(e, k), Sssp(0), sssp_init(0), std::nullopt, opt).first, sssp_ref);
      EXPECT_EQ(run(test::partition(sym, k), Cc{}, cc_init(), std::nullopt, opt).first, cc_ref);
      const auto pr = run(test::partition(e, k), PageRank(), pagerank_init(), 30, opt).first;
      ASSERT_EQ(pr.size(), pr_ref.size());
      for (std::size_t i = 0; i < pr.size(); ++i) EXPECT_NEAR(pr[i].second, pr_ref[i].second, 30e-9);
    }
  }
}

TEST(Engine, CombinersReturnToIdentity) {
  const auto parts = test::partition(test::random_edges(100, 1500, 8), 4);
  Engine<PageRank> engine(parts, PageRank(), pagerank_init());
  for (int i = 0; i < 3; ++i) {
    engine.run_superstep();
    EXPECT_TRUE(engine.combiners_at_identity());
  }
}

TEST(Checkpoint, RestoreContinuesBitIdentically) {
  const auto e = test::random_edges(400, 4000, 23, true);
  const auto parts = test::partition(e, 4);
  const auto [expected, full] = run(parts, Sssp(0), sssp_init(0));
  ASSERT_GT(full.size(), 2U);

  Engine<Sssp> first(parts, Sssp(0), sssp_init(0));
  const std::uint64_t half = (full.size() + 1) / 2;
  first.run_to_termination(half);
  std::stringstream snapshot;
  first.checkpoint(snapshot);

  auto resumed = Engine<Sssp>::restore(parts, Sssp(0), snapshot);
  EXPECT_EQ(resumed.superstep(), half);
  const auto rest = resumed.run_to_termination();
  EXPECT_EQ(resumed.results(), expected);
  EXPECT_EQ(half + rest.size(), full.size());
}

TEST(Checkpoint, FileRoundTripForPageRank) {
  test::TempDir dir("ckpt");
  const auto parts = test::partition(test::random_edges(100, 800, 2), 3);
  Engine<PageRank> a(parts, PageRank(), pagerank_init());
  a.run_to_termination(10);
  a.checkpoint(dir / "pr.ckpt");
  auto b = Engine<PageRank>::restore(parts, PageRank(), dir / "pr.ckpt");
  a.run_to_termination(20);
  b.run_to_termination(20);
  EXPECT_EQ(a.results(), b.results());
}

TEST(Checkpoint, TopologyMismatchIsRejected) {
  const auto e = test::random_edges(100, 800, 2);
  const auto parts4 = test::partition(e, 4);
  const auto parts3 = test::partition(e, 3);
  Engine<Cc> engine(parts4, Cc{}, cc_init());
  engine.run_superstep();
  std::stringstream snapshot;
  engine.checkpoint(snapshot);
  const std::string bytes = snapshot.str();
  std::stringstream s1(bytes);
  EXPECT_THROW(Engine<Cc>::restore(parts3, Cc{}, s1), CompatibilityError);
  const auto other = test::partition(test::random_edges(100, 800, 3), 4);
  std::stringstream s2(bytes);
  EXPECT_THROW(Engine<Cc>::restore(other, Cc{}, s2), CompatibilityError);
  std::stringstream s3(bytes);
  EXPECT_THROW(Engine<PageRank>::restore(parts4, PageRank(), s3), CompatibilityError);
  std::stringstream s4("GRECKPX");
  EXPECT_THROW(Engine<Cc>::restore(parts4, Cc{}, s4), FormatError);
  std::stringstream s5(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(Engine<Cc>::restore(parts4, Cc{}, s5), FormatError);
}

TEST(Checkpoint, SnapshotHoldsMasterStateOnly) {
  // Same masters, different agent counts: size must not depend on agents.
  const auto e = test::random_edges(60, 900, 4);
  const auto parts = test::partition(e, 2);
  Engine<Cc> engine(parts, Cc{}, cc_init());
  std::stringstream snapshot;
  engine.checkpoint(snapshot);
  std::size_t masters = 0;
  for (const auto& p : parts) masters += p.master_count;
  const std::size_t header = 8 + 4 + 8 + 4 + 8 + 4 + 4;
  std::size_t per_part = 0;
  for (const auto& p : parts) {
    const std::size_t words = (p.master_count + 63) / 64;
    per_part += 4 + 4 + 8 + 4 * 8 + 2 * 8 * p.master_count + 2 * 8 * words;
  }
  EXPECT_EQ(snapshot.str().size(), header + per_part);
  EXPECT_GT(masters, 0U);
}

}  // namespace
}  // namespace gre
