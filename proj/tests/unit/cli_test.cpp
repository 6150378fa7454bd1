#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "gre/partition/metrics.hpp"
#include "test_graphs.hpp"

namespace gre {
namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the gre binary; stderr is folded into the captured output.
Result gre(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " GRE_CLI_PATH " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class Cli : public ::testing::Test {
 protected:
  test::TempDir dir{"cli"};
  std::string at(const std::string& name) const { return (dir / name).string(); }
};

TEST_F(Cli, GenReportsSizes) {
  const auto r = gre("gen --scale 14 --edge-factor 16 --seed 1 -o " + at("g.txt"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("vertices 16384"), std::string::npos);
  EXPECT_NE(r.out.find("edges 262144"), std::string::npos);
  EXPECT_EQ(count_lines(slurp(dir / "g.txt")), 262144U);
}

TEST_F(Cli, GenWithWeightsAndBinaryOutput) {
  ASSERT_EQ(gre("gen --scale 6 --weights 1:65535 -o " + at("w.txt")).code, 0);
  std::istringstream first(slurp(dir / "w.txt"));
  std::string line;
  std::getline(first, line);
  EXPECT_EQ(std::count(line.begin(), line.end(), ' '), 2);
  ASSERT_EQ(gre("gen --scale 6 --weights 1:65535 -o " + at("w.bin")).code, 0);
  EXPECT_EQ(std::filesystem::file_size(dir / "w.bin"), 64U * 16U * 20U);
}

TEST_F(Cli, ExitCodesByErrorKind) {
  EXPECT_EQ(gre("gen --scale 0 -o " + at("x.txt")).code, 2);
  EXPECT_EQ(gre("gen --scale 4 --bogus -o " + at("x.txt")).code, 2);
  EXPECT_EQ(gre("gen --scale 4 --weights 9:1 -o " + at("x.txt")).code, 2);
  EXPECT_EQ(gre("gen --scale 4 -o /nonexistent-dir/x.txt").code, 3);
  EXPECT_EQ(gre("partition -i " + at("missing.txt") + " -o " + at("p")).code, 3);
  std::ofstream(dir / "bad.txt") << "0 1\n1 x\n";
  const auto bad = gre("partition -i " + at("bad.txt") + " -o " + at("p"));
  EXPECT_EQ(bad.code, 4);
  EXPECT_NE(bad.out.find("line 2"), std::string::npos);
  ASSERT_EQ(gre("gen --scale 5 -o " + at("g.txt")).code, 0);
  EXPECT_EQ(gre("run --app sssp --source 0 -i " + at("g.txt") + " -o " + at("r.csv")).code, 5);
  EXPECT_EQ(gre("run --app nope -i " + at("g.txt") + " -o " + at("r.csv")).code, 2);
}

TEST_F(Cli, PartitionWritesFilesAndReport) {
  ASSERT_EQ(gre("gen --scale 10 -o " + at("g.txt")).code, 0);
  const auto r = gre("partition -i " + at("g.txt") + " -k 16 --mode greedy-oblivious --loaders 8 -o " +
                     at("p16"));
  ASSERT_EQ(r.code, 0) << r.out;
  for (PartitionId i = 0; i < 16; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "part-%05u.grp", i);
    EXPECT_TRUE(std::filesystem::exists(dir / "p16" / name)) << name;
  }
  const auto m = metrics_from_json(slurp(dir / "p16" / "metrics.json"));
  EXPECT_EQ(m.k, 16U);
  EXPECT_GT(m.agent_count, 0U);
  EXPECT_NE(r.out.find("greedy-oblivious"), std::string::npos);

  ASSERT_EQ(gre("partition -i " + at("g.txt") + " -k 1 -o " + at("p1")).code, 0);
  EXPECT_EQ(metrics_from_json(slurp(dir / "p1" / "metrics.json")).agent_count, 0U);
}

TEST_F(Cli, RunPageRankLogsEverySuperstep) {
  ASSERT_EQ(gre("gen --scale 8 -o " + at("g.txt")).code, 0);
  const auto r = gre("run --app pagerank --iterations 50 -i " + at("g.txt") + " -k 4 -o " + at("pr.csv") +
                     " --report " + at("steps.jsonl"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto steps = slurp(dir / "steps.jsonl");
  EXPECT_EQ(count_lines(steps), 50U);
  EXPECT_NE(steps.find("\"superstep\":50"), std::string::npos);
  EXPECT_EQ(slurp(dir / "pr.csv").rfind("global_id,value\n", 0), 0U);
}

TEST_F(Cli, CcOnDirectedInputUsesSymmetrizedView) {
  ASSERT_EQ(gre("gen --scale 7 -o " + at("g.txt")).code, 0);
  const auto r = gre("run --app cc -i " + at("g.txt") + " -k 3 -o " + at("cc.csv") + " --report " + at("s"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("symmetrized"), std::string::npos);
  ASSERT_EQ(gre("reference --app cc -i " + at("g.txt") + " -o " + at("ref.csv")).code, 0);
  const auto a = gre("analyze --result " + at("cc.csv") + " --reference " + at("ref.csv"));
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_NE(a.out.find("mismatches 0"), std::string::npos);
}

TEST_F(Cli, CcFromUnsymmetrizedPartitionsIsRejected) {
  ASSERT_EQ(gre("gen --scale 6 -o " + at("g.txt")).code, 0);
  ASSERT_EQ(gre("partition -i " + at("g.txt") + " -k 2 -o " + at("p")).code, 0);
  EXPECT_EQ(gre("run --app cc -p " + at("p") + " -o " + at("cc.csv")).code, 5);
  ASSERT_EQ(gre("partition --symmetrize -i " + at("g.txt") + " -k 2 -o " + at("ps")).code, 0);
  EXPECT_EQ(gre("run --app cc -p " + at("ps") + " -o " + at("cc.csv") + " --report " + at("s")).code, 0);
}

TEST_F(Cli, SsspFromPartitionsMatchesReference) {
  ASSERT_EQ(gre("gen --scale 9 --weights 1:100 -o " + at("g.txt")).code, 0);
  ASSERT_EQ(gre("partition --weighted -i " + at("g.txt") + " -k 4 --mode gre-s -o " + at("p")).code, 0);
  ASSERT_EQ(gre("run --app sssp --source 0 -p " + at("p") + " -o " + at("s.csv") + " --report " + at("r")).code, 0);
  ASSERT_EQ(gre("reference --app sssp --weighted --source 0 -i " + at("g.txt") + " -o " + at("ref.csv")).code, 0);
  const auto a = gre("analyze --format json --result " + at("s.csv") + " --reference " + at("ref.csv"));
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_NE(a.out.find("\"mismatches\":0"), std::string::npos);
}

TEST_F(Cli, CheckpointAndRestore) {
  ASSERT_EQ(gre("gen --scale 9 --weights 1:100 -o " + at("g.txt")).code, 0);
  ASSERT_EQ(gre("partition --weighted -i " + at("g.txt") + " -k 3 -o " + at("p")).code, 0);
  const std::string base = "run --app sssp --source 1 -p " + at("p") + " --report " + at("r");
  ASSERT_EQ(gre(base + " -o " + at("full.csv")).code, 0);
  ASSERT_EQ(gre(base + " --iterations 2 --checkpoint-interval 2 --checkpoint-path " + at("c.ckpt") +
                " -o " + at("half.csv")).code, 0);
  ASSERT_EQ(gre(base + " --restore " + at("c.ckpt") + " -o " + at("resumed.csv")).code, 0);
  EXPECT_EQ(slurp(dir / "resumed.csv"), slurp(dir / "full.csv"));
  ASSERT_EQ(gre("partition --weighted -i " + at("g.txt") + " -k 2 -o " + at("p2")).code, 0);
  EXPECT_EQ(gre("run --app sssp --source 1 -p " + at("p2") + " --restore " + at("c.ckpt") + " -o " +
                at("x.csv")).code, 5);
}

TEST_F(Cli, AnalyzeComparesMetricsAndRejectsBadSchemas) {
  ASSERT_EQ(gre("gen --scale 10 -o " + at("g.txt")).code, 0);
  ASSERT_EQ(gre("partition -i " + at("g.txt") + " -k 8 --mode hash -o " + at("hash")).code, 0);
  ASSERT_EQ(gre("partition -i " + at("g.txt") + " -k 8 -o " + at("greedy")).code, 0);
  const auto r = gre("analyze --metrics " + at("hash/metrics.json") + " " + at("greedy/metrics.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("hash"), std::string::npos);
  EXPECT_NE(r.out.find("greedy"), std::string::npos);
  EXPECT_NE(r.out.find("scatter%"), std::string::npos);
  std::ofstream(dir / "bad.json") << "{\"k\": 1}";
  EXPECT_EQ(gre("analyze --metrics " + at("bad.json")).code, 4);
  std::ofstream(dir / "bad.csv") << "id,val\n1,2\n";
  EXPECT_EQ(gre("analyze --result " + at("bad.csv") + " --reference " + at("bad.csv")).code, 4);
}

TEST_F(Cli, DeterministicArtifacts) {
  ASSERT_EQ(gre("gen --scale 9 -o " + at("a.txt")).code, 0);
  ASSERT_EQ(gre("gen --scale 9 -o " + at("b.txt")).code, 0);
  EXPECT_EQ(slurp(dir / "a.txt"), slurp(dir / "b.txt"));
  ASSERT_EQ(gre("partition -i " + at("a.txt") + " -k 4 --mode gre-p -o " + at("p1")).code, 0);
  ASSERT_EQ(gre("partition -i " + at("a.txt") + " -k 4 --mode gre-p -o " + at("p2")).code, 0);
  for (const char* f : {"part-00000.grp", "part-00003.grp", "metrics.json"}) {
    EXPECT_EQ(slurp(dir / "p1" / f), slurp(dir / "p2" / f)) << f;
  }
  const std::string run = "run --app pagerank --iterations 5 -p " + at("p1") + " --report " + at("r");
  ASSERT_EQ(gre(run + " -o " + at("x.csv")).code, 0);
  ASSERT_EQ(gre(run + " -o " + at("y.csv"), "GRE_BUFFER_CAPACITY=200").code, 0);
  EXPECT_EQ(slurp(dir / "x.csv"), slurp(dir / "y.csv"));
  EXPECT_EQ(gre(run + " -o " + at("w.csv"), "GRE_WORKERS=3").code, 0);
  EXPECT_EQ(gre(run + " -o " + at("z.csv"), "GRE_WORKERS=0").code, 2);
  EXPECT_EQ(gre(run + " -o " + at("z.csv"), "GRE_BUFFER_CAPACITY=10").code, 2);
}

}  // namespace
}  // namespace gre
