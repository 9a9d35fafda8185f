// Copyright 2026 The WassDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "wassdp/distribution.h"
#include "wassdp/embedding.h"
#include "wassdp/finite_metric.h"
#include "wassdp/hst.h"
#include "wassdp/node_function.h"
#include "wassdp/rng.h"
#include "wassdp/wasserstein.h"

namespace wassdp {
namespace {

using ::testing::ElementsAre;

Hst BinaryTree() {
  // Root, two children, four leaves.
  return *Hst::Create(8.0, {-1, 0, 0, 1, 1, 2, 2}, {-1, -1, -1, 0, 1, 2, 3},
                      MetricDomain{"four", 4});
}

FiniteMetric RandomPoints(int m, int dim, Rng& rng) {
  std::vector<std::vector<double>> pts(m, std::vector<double>(dim));
  for (auto& p : pts) {
    for (double& x : p) x = rng.Uniform();
  }
  return *FiniteMetric::FromPoints("random", pts);
}

TEST(HstTest, LevelsWeightsAndDistances) {
  const Hst t = BinaryTree();
  EXPECT_EQ(t.depth(), 2);
  EXPECT_EQ(t.edge_weight(1), 8);
  EXPECT_EQ(t.edge_weight(2), 4);
  EXPECT_EQ(t.level_begin(2), 3);
  EXPECT_EQ(t.level_end(2), 7);
  EXPECT_EQ(t.PointDistance(0, 1), 8);
  EXPECT_EQ(t.PointDistance(0, 3), 24);
  EXPECT_EQ(t.PointDistance(2, 2), 0);
  EXPECT_EQ(t.Parents(), (std::vector<int32_t>{-1, 0, 0, 1, 1, 2, 2}));
  EXPECT_EQ(t.NodePoints(), (std::vector<int64_t>{-1, -1, -1, 0, 1, 2, 3}));
}

TEST(HstTest, RejectsMalformedTrees) {
  const MetricDomain d{"x", 2};
  // Not breadth-first.
  EXPECT_FALSE(Hst::Create(1, {-1, 0, 2}, {-1, 0, 1}, d).ok());
  // Leaves at different levels.
  EXPECT_FALSE(Hst::Create(1, {-1, 0, 0, 1}, {-1, -1, 0, 1}, d).ok());
  // A point mapped twice.
  EXPECT_FALSE(Hst::Create(1, {-1, 0, 0}, {-1, 0, 0}, d).ok());
  EXPECT_FALSE(Hst::Create(0, {-1, 0, 0}, {-1, 0, 1}, d).ok());
}

TEST(HstTest, FingerprintSeparatesWeights) {
  const Hst a = BinaryTree();
  const Hst b = *Hst::Create(4.0, a.Parents(), a.NodePoints(), a.point_domain());
  EXPECT_NE(a.fingerprint(), b.fingerprint());
  EXPECT_EQ(a.fingerprint(), BinaryTree().fingerprint());
}

TEST(FrtTest, SinglePointIsARoot) {
  const FiniteMetric m = *FiniteMetric::FromPoints("one", {{0.5}});
  Rng rng(1);
  const Hst t = *BuildFrtEmbedding(m, rng);
  EXPECT_EQ(t.depth(), 0);
  EXPECT_EQ(t.num_nodes(), 1);
}

TEST(FrtTest, TwoPointsSplitBelowTheRoot) {
  const FiniteMetric m = *FiniteMetric::FromPoints("two", {{0.0}, {3.0}});
  Rng rng(2);
  const Hst t = *BuildFrtEmbedding(m, rng);
  EXPECT_EQ(t.depth(), 1);
  EXPECT_NE(t.leaf_of_point(0), t.leaf_of_point(1));
  EXPECT_GE(t.PointDistance(0, 1), 3.0);
  EXPECT_LE(t.PointDistance(0, 1), 3.0 * (1 + 1e-12));
}

TEST(FrtTest, TreeMetricDominatesWithATightPair) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const FiniteMetric m = RandomPoints(2 + static_cast<int>(rng.UniformInt(30)),
                                        1 + static_cast<int>(rng.UniformInt(3)),
                                        rng);
    Rng tree_rng = rng.Split(t);
    const Hst h = *BuildFrtEmbedding(m, tree_rng);
    double tightest = 1e300;
    for (int64_t i = 0; i < m.size(); ++i) {
      for (int64_t j = i + 1; j < m.size(); ++j) {
        const double ratio = h.PointDistance(i, j) / m.distance(i, j);
        EXPECT_GE(ratio, 1.0) << i << " " << j;
        tightest = std::min(tightest, ratio);
      }
    }
    EXPECT_NEAR(tightest, 1.0, 1e-12);
  }
}

TEST(FrtTest, SameSeedSameTree) {
  Rng data(4);
  const FiniteMetric m = RandomPoints(20, 2, data);
  Rng a(5), b(5);
  EXPECT_EQ(BuildFrtEmbedding(m, a)->fingerprint(),
            BuildFrtEmbedding(m, b)->fingerprint());
}

TEST(GridEmbeddingTest, UnitIntervalHalves) {
  Rng rng(1);
  const GridEmbedding e = *GridEmbedding::Create(1, 0.5, rng, false);
  const Hst& t = e.hst();
  EXPECT_EQ(t.depth(), 1);
  EXPECT_EQ(t.num_points(), 2);
  EXPECT_EQ(*e.PointOf({0.2}), 0);
  EXPECT_EQ(*e.PointOf({0.7}), 1);
  EXPECT_EQ(*e.PointOf({1.0}), 1);
  EXPECT_THAT(e.representative(0), ElementsAre(0.25));
  EXPECT_EQ(t.PointDistance(0, 1), 1.0);
  EXPECT_FALSE(e.PointOf({1.5}).ok());
  EXPECT_FALSE(e.PointOf({0.5, 0.5}).ok());
}

TEST(GridEmbeddingTest, UnitSquareAtFineResolution) {
  Rng rng(2);
  const GridEmbedding e = *GridEmbedding::Create(2, std::ldexp(1.0, -10), rng,
                                                 false);
  EXPECT_EQ(e.hst().depth(), 10);
  EXPECT_EQ(e.hst().num_points(), int64_t{1} << 20);
}

TEST(GridEmbeddingTest, ShiftAddsALevel) {
  Rng rng(3);
  const GridEmbedding e = *GridEmbedding::Create(2, 0.25, rng, true);
  EXPECT_EQ(e.hst().depth(), 3);
  for (double s : e.shift()) {
    EXPECT_GE(s, 0);
    EXPECT_LT(s, 1);
  }
}

TEST(GridEmbeddingTest, DominatesEuclideanAcrossLeaves) {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    Rng tree_rng = rng.Split(t);
    const GridEmbedding e = *GridEmbedding::Create(2, 1.0 / 16, tree_rng);
    for (int i = 0; i < 200; ++i) {
      const std::vector<double> x = {rng.Uniform(), rng.Uniform()};
      const std::vector<double> y = {rng.Uniform(), rng.Uniform()};
      const int64_t px = *e.PointOf(x);
      const int64_t py = *e.PointOf(y);
      if (px == py) continue;
      EXPECT_GE(e.hst().PointDistance(px, py),
                std::hypot(x[0] - y[0], x[1] - y[1]));
    }
  }
}

TEST(GridEmbeddingTest, SameSeedSameShift) {
  Rng a(6), b(6);
  EXPECT_EQ(GridEmbedding::Create(3, 0.1, a)->shift(),
            GridEmbedding::Create(3, 0.1, b)->shift());
}

TEST(NodeFunctionTest, InducedMassesAreConserved) {
  const Hst t = BinaryTree();
  const auto p = *DiscreteDistribution::Create(t.point_domain(),
                                               {0.1, 0.2, 0.3, 0.4});
  const NodeFunction g = *InducedNodeFunction(p, t);
  EXPECT_NEAR(g.value(0), 1, 1e-15);
  EXPECT_NEAR(g.value(1), 0.3, 1e-15);
  EXPECT_NEAR(g.value(2), 0.7, 1e-15);
  for (int32_t v = 0; v < t.num_nodes(); ++v) {
    if (t.is_leaf(v)) continue;
    double sum = 0;
    for (int32_t c = 0; c < t.node(v).num_children; ++c) {
      sum += g.value(t.node(v).first_child + c);
    }
    EXPECT_NEAR(sum, g.value(v), 1e-15);
  }
  EXPECT_THAT(LevelValues(g, t, 1), ElementsAre(g.value(1), g.value(2)));
}

TEST(NodeFunctionTest, ActiveNodesUseStrictThreshold) {
  const Hst t = BinaryTree();
  const NodeFunction g(t, {1, 0.3, 0.7, 0.1, 0.2, 0.3, 0.4});
  EXPECT_THAT(ActiveNodes(g, 0.3), ElementsAre(0, 2, 6));
}

TEST(NodeFunctionTest, WeightedL1IsTheTreeDistance) {
  const Hst t = BinaryTree();
  const auto p = *DiscreteDistribution::PointMass(t.point_domain(), 0);
  const auto q = *DiscreteDistribution::PointMass(t.point_domain(), 3);
  const NodeFunction gp = *InducedNodeFunction(p, t);
  const NodeFunction gq = *InducedNodeFunction(q, t);
  EXPECT_EQ(*WeightedL1(gp, gq, t), t.PointDistance(0, 3));
  EXPECT_EQ(*W1Tree(gp, gq, t), 24);
}

TEST(NodeFunctionTest, RejectsMassOnUnmappedPoints) {
  const Hst t = *Hst::Create(1, {-1, 0, 0}, {-1, 0, 2}, MetricDomain{"m", 3});
  const auto p = *DiscreteDistribution::PointMass(t.point_domain(), 1);
  EXPECT_FALSE(InducedNodeFunction(p, t).ok());
}

}  // namespace
}  // namespace wassdp
