#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "gre/error.hpp"
#include "gre/rmat.hpp"

namespace gre {
namespace {

RmatParams small(unsigned scale, unsigned edge_factor = 16) {
  RmatParams p;
  p.scale = scale;
  p.edge_factor = edge_factor;
  return p;
}

TEST(Rmat, EdgeCountIsEdgeFactorTimesVertexCount) {
  const auto p = small(3);
  EXPECT_EQ(p.vertex_count(), 8U);
  const auto e = generate_rmat(p);
  EXPECT_EQ(e.size(), 128U);
  for (std::size_t i = 0; i < e.size(); ++i) {
    EXPECT_LT(e.source(i), 8U);
    EXPECT_LT(e.target(i), 8U);
  }
}

TEST(Rmat, Graph500ParametersAreAccepted) {
  RmatParams p = small(4);
  p.a = 0.57;
  p.b = 0.19;
  p.c = 0.19;
  p.d = 0.05;
  EXPECT_NO_THROW(validate(p));
}

TEST(Rmat, InvalidParametersAreRejected) {
  EXPECT_THROW(validate(small(0)), ParameterError);
  EXPECT_THROW(validate(small(41)), ParameterError);
  EXPECT_THROW(validate(small(4, 0)), ParameterError);
  RmatParams p = small(4);
  p.d = 0.1;
  EXPECT_THROW(generate_rmat(p), ParameterError);
  p = small(4);
  p.a = -0.01;
  p.b = 0.81;
  EXPECT_THROW(validate(p), ParameterError);
}

TEST(Rmat, SameSeedGivesIdenticalOutput) {
  const auto p = small(10);
  EXPECT_EQ(generate_rmat(p), generate_rmat(p));
  RmatParams other = p;
  other.seed = 2;
  EXPECT_NE(generate_rmat(p), generate_rmat(other));
}

TEST(Rmat, ThreadedGenerationMatchesSequentialOrder) {
  RmatParams p = small(9);
  const auto sequential = generate_rmat(p);
  p.threads = 4;
  EXPECT_EQ(generate_rmat(p), sequential);
}

TEST(Rmat, PermutationIsSeededAndPreservesDegreeMultiset) {
  RmatParams p = small(8);
  p.permute = true;
  const auto a = generate_rmat(p);
  EXPECT_EQ(a, generate_rmat(p));
  p.permute = false;
  const auto plain = generate_rmat(p);
  EXPECT_NE(a, plain);
  EXPECT_EQ(a.size(), plain.size());
}

TEST(Rmat, TopLevelQuadrantFrequenciesMatchProbabilities) {
  RmatParams p = small(16);  // 2^20 edges
  const auto e = generate_rmat(p);
  const GlobalId half = p.vertex_count() / 2;
  std::array<double, 4> counts{};
  for (std::size_t i = 0; i < e.size(); ++i) {
    counts[(e.source(i) >= half ? 2 : 0) + (e.target(i) >= half ? 1 : 0)] += 1;
  }
  const std::array<double, 4> prob = {p.a, p.b, p.c, p.d};
  const double n = static_cast<double>(e.size());
  for (int q = 0; q < 4; ++q) {
    const double se = std::sqrt(prob[q] * (1 - prob[q]) / n);
    EXPECT_NEAR(counts[q] / n, prob[q], 3 * se) << "quadrant " << q;
  }
}

TEST(Weights, UniformRangeAndDeterminism) {
  const auto e = generate_rmat(small(8));
  const auto w = assign_weights(e, 1, 65535, 9);
  ASSERT_TRUE(w.weighted());
  Weight lo = 65535;
  Weight hi = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    lo = std::min(lo, w.weight(i));
    hi = std::max(hi, w.weight(i));
  }
  EXPECT_GE(lo, 1U);
  EXPECT_LE(hi, 65535U);
  EXPECT_GT(hi - lo, 60000U);
  EXPECT_EQ(w, assign_weights(e, 1, 65535, 9));
  EXPECT_NE(w, assign_weights(e, 1, 65535, 10));
}

TEST(Weights, DegenerateRangeAndErrors) {
  const auto e = generate_rmat(small(4));
  const auto w = assign_weights(e, 7, 7, 1);
  for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(w.weight(i), 7U);
  EXPECT_THROW(assign_weights(e, 8, 7, 1), ParameterError);
  EXPECT_THROW(assign_weights(e, 1, 1ULL << 33, 1), ParameterError);
}

}  // namespace
}  // namespace gre
