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
#include <limits>
#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "wassdp/distribution.h"
#include "wassdp/embedding.h"
#include "wassdp/hst.h"
#include "wassdp/lambert_w.h"
#include "wassdp/node_function.h"
#include "wassdp/rng.h"
#include "wassdp/tree_estimator.h"
#include "wassdp/wasserstein.h"

namespace wassdp {
namespace {

using ::testing::ElementsAre;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Complete binary tree with 2^depth leaves.
Hst BinaryHst(int depth, double top_weight = 1.0) {
  std::vector<int32_t> parents = {-1};
  std::vector<int64_t> points = {-1};
  int32_t begin = 0, end = 1;
  for (int l = 1; l <= depth; ++l) {
    for (int32_t v = begin; v < end; ++v) {
      parents.push_back(v);
      parents.push_back(v);
    }
    begin = end;
    end = static_cast<int32_t>(parents.size());
  }
  points.resize(parents.size(), -1);
  for (int32_t v = begin, p = 0; v < end; ++v, ++p) points[v] = p;
  return *Hst::Create(top_weight, parents, points,
                      MetricDomain{"binary", int64_t{1} << depth});
}

Dataset Records(const Hst& hst, const std::vector<int64_t>& counts) {
  std::vector<int64_t> s;
  for (size_t i = 0; i < counts.size(); ++i) s.insert(s.end(), counts[i], i);
  return *MakeDataset(hst.point_domain(), s);
}

TEST(ThresholdTest, FrozenValues) {
  EXPECT_NEAR(TruncationThreshold(1000, 0.05), 7 * std::log(20000.0) / 1000,
              1e-15);
  // 2 kappa + ln(2 / beta) / (eps n) with kappa = 0.6 / (10 eps n).
  EXPECT_NEAR(*ActiveThreshold(1, 0, 0.05, 1000),
              0.12 / 1000 + std::log(40.0) / 1000, 1e-15);
  const ActiveSandwich s = ActiveSandwichThresholds(1, 0.05, 1000);
  EXPECT_NEAR(s.outer, 0.0005, 1e-18);
  EXPECT_NEAR(s.inner, 192 * std::log(20000.0) / 1000, 1e-12);
}

TEST(EmpDistTruncatedTest, PointMassIsExact) {
  const Hst t = BinaryHst(3);
  const Dataset d = Records(t, {0, 0, 0, 0, 0, 50, 0, 0});
  const NodeFunction g = *EmpDistTruncated(d, t, 0.05);
  const NodeFunction truth =
      *InducedNodeFunction(*DiscreteDistribution::PointMass(t.point_domain(), 5), t);
  EXPECT_EQ(g.values(), truth.values());
}

TEST(EmpDistTruncatedTest, SmallAndLargeMassesAreRounded) {
  // n = 1000: threshold 7 ln(20000) / 1000 = 0.0693.
  const Hst t = BinaryHst(2);
  const Dataset d = Records(t, {30, 900, 40, 30});
  const NodeFunction g = *EmpDistTruncated(d, t, 0.05);
  EXPECT_EQ(g.value(0), 1);
  EXPECT_EQ(g.value(1), 0.93);  // 930 / 1000 stays.
  EXPECT_EQ(g.value(2), 0.07);  // 70 / 1000 is just above the threshold.
  EXPECT_EQ(g.value(3), 0);
  EXPECT_EQ(g.value(4), 0.9);
  EXPECT_EQ(g.value(5), 0);
  EXPECT_EQ(g.value(6), 0);
}

TEST(EmpDistTruncatedTest, NearOneIsRoundedUp) {
  const Hst t = BinaryHst(1);
  const Dataset d = Records(t, {1990, 10});
  const NodeFunction g = *EmpDistTruncated(d, t, 0.05);
  // Threshold 7 ln(40000) / 2000 = 0.037.
  EXPECT_EQ(g.value(1), 1);
  EXPECT_EQ(g.value(2), 0);
}

TEST(LocateActiveNodesTest, NoiselessSearchKeepsHeavyNodes) {
  const Hst t = BinaryHst(2);
  const Dataset d = Records(t, {500, 500, 0, 0});
  const NodeFunction g = *EmpDistTruncated(d, t, 0.05);
  Rng rng(1);
  PrivacyLedger ledger;
  const auto active = *LocateActiveNodes(g, kInf, 0.05, 0, 1000, t, rng, &ledger);
  EXPECT_THAT(active, ElementsAre(0, 1, 3, 4));
  EXPECT_EQ(ledger.entries().size(), 2u);
}

TEST(LocateActiveNodesTest, ChargesEveryLevelEvenWhenStoppingEarly) {
  const Hst t = BinaryHst(4);
  const NodeFunction g(t);  // All zero below the root, so the search stops.
  NodeFunction root_only = g;
  root_only[0] = 1;
  Rng rng(2);
  PrivacyLedger ledger;
  const auto active =
      *LocateActiveNodes(root_only, 0.3, 0.05, 0, 100000, t, rng, &ledger);
  EXPECT_THAT(active, ElementsAre(0));
  EXPECT_EQ(ledger.total_epsilon(), 4 * 0.3);
}

TEST(AddNoiseActiveTest, ZeroOffTheActiveSet) {
  const Hst t = BinaryHst(1);
  const NodeFunction g(t, {1, 0.4, 0.6});
  Rng rng(3);
  PrivacyLedger ledger;
  const NodeFunction noisy = *AddNoiseActive(g, {0, 2}, 1, 100, t, rng, &ledger);
  EXPECT_EQ(noisy.value(0), 1);
  EXPECT_EQ(noisy.value(1), 0);
  EXPECT_NE(noisy.value(2), 0.6);
  EXPECT_EQ(ledger.total_epsilon(), 1);
}

TEST(ProjectionTest, FixesDistributionInducedFunctions) {
  const Hst t = BinaryHst(3);
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> w(8);
    double total = 0;
    for (double& x : w) total += x = rng.Uniform() < 0.3 ? 0 : rng.UniformPositive();
    if (total == 0) w[0] = total = 1;
    for (double& x : w) x /= total;
    const auto p = *DiscreteDistribution::Create(t.point_domain(), w);
    const auto projected = *Projection(*InducedNodeFunction(p, t), t);
    for (int64_t i = 0; i < 8; ++i) EXPECT_NEAR(projected.weight(i), w[i], 1e-14);
  }
}

TEST(ProjectionTest, ZeroChildrenShareEvenly) {
  const Hst t = BinaryHst(1);
  const auto p = *Projection(NodeFunction(t, {1, 0, 0}), t);
  EXPECT_EQ(p.weight(0), 0.5);
  EXPECT_EQ(p.weight(1), 0.5);
}

TEST(ProjectionTest, NegativesCountAsZero) {
  const Hst t = BinaryHst(1);
  const auto p = *Projection(NodeFunction(t, {1, -0.3, 0.2}), t);
  EXPECT_EQ(p.weight(0), 0);
  EXPECT_EQ(p.weight(1), 1);
  EXPECT_FALSE(Projection(NodeFunction(t, {0.5, 0.2, 0.3}), t).ok());
}

TEST(WeightedL1Test, TriangleInequality) {
  const Hst t = BinaryHst(3, 4.0);
  Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> a(t.num_nodes()), b(a.size()), c(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
      a[i] = 2 * rng.Uniform() - 0.5;
      b[i] = 2 * rng.Uniform() - 0.5;
      c[i] = 2 * rng.Uniform() - 0.5;
    }
    const NodeFunction fa(t, a), fb(t, b), fc(t, c);
    EXPECT_LE(*WeightedL1(fa, fb, t),
              *WeightedL1(fa, fc, t) + *WeightedL1(fc, fb, t) + 1e-12);
  }
}

TEST(PrivDensityEstTreeTest, LedgerTotalsDepthPlusOneTimesEpsilon) {
  Rng rng(6);
  const GridEmbedding e =
      *GridEmbedding::Create(1, std::ldexp(1.0, -10), rng, false);
  ASSERT_EQ(e.hst().depth(), 10);
  std::vector<int64_t> s;
  for (int i = 0; i < 500; ++i) s.push_back(rng.UniformInt(1024));
  const Dataset d = *MakeDataset(e.hst().point_domain(), s);
  const TreeEstimate est = *PrivDensityEstTree(d, e.hst(), 0.1, rng);
  EXPECT_EQ(est.ledger.total_epsilon(), 1.1);
  EXPECT_EQ(est.ledger.entries().size(), 11u);
}

TEST(PrivDensityEstTreeTest, InfiniteEpsilonRecoversAPointMass) {
  const Hst t = BinaryHst(3);
  const Dataset d = Records(t, {0, 0, 200, 0, 0, 0, 0, 0});
  Rng rng(7);
  const TreeEstimate est = *PrivDensityEstTree(d, t, kInf, rng);
  EXPECT_EQ(est.distribution.weight(2), 1);
}

TEST(PrivDensityEstTreeTest, OutputIsADistributionOnTheTreePoints) {
  const Hst t = BinaryHst(3);
  const Dataset d = Records(t, {100, 30, 0, 500, 20, 0, 300, 50});
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const TreeEstimate est = *PrivDensityEstTree(d, t, 0.5, rng);
    double total = 0;
    for (double w : est.distribution.weights()) {
      EXPECT_GE(w, 0);
      total += w;
    }
    EXPECT_NEAR(total, 1, 1e-12);
  }
}

// Neighbors differ in one record. The release composes (D + 1) mechanisms,
// and a replaced record moves two leaves, so the per-event ratio is bounded
// by e^{2 (D + 1) eps}.
TEST(PrivDensityEstTreeTest, NeighborOutputFrequenciesStayClose) {
  const Hst t = BinaryHst(2);
  const Dataset d0 = Records(t, {500, 500, 500, 500});
  const Dataset d1 = Records(t, {501, 500, 499, 500});
  const double eps = 0.05;
  const int trials = 20000;
  std::vector<int> c0(4), c1(4);
  Rng r0(8), r1(9);
  for (int i = 0; i < trials; ++i) {
    const auto a = PrivDensityEstTree(d0, t, eps, r0)->distribution.weights();
    const auto b = PrivDensityEstTree(d1, t, eps, r1)->distribution.weights();
    ++c0[std::max_element(a.begin(), a.end()) - a.begin()];
    ++c1[std::max_element(b.begin(), b.end()) - b.begin()];
  }
  const double bound = std::exp(2 * 3 * eps) * 1.1;
  for (int i = 0; i < 4; ++i) {
    if (c0[i] < 1000 || c1[i] < 1000) continue;
    const double ratio = static_cast<double>(c0[i]) / c1[i];
    EXPECT_LE(ratio, bound);
    EXPECT_GE(ratio, 1 / bound);
  }
}

TEST(TargetRateDiscreteTest, UniformOnAThousandAtoms) {
  // kappa = 0.6 / (10 * 100) = 6e-4 and 2 kappa exceeds every atom's 1e-3.
  const std::vector<double> p(1000, 1e-3);
  const DiscreteRateReport r = *TargetRateDiscrete(p, 100, 1, 0);
  EXPECT_NEAR(r.inactive_term, 1, 1e-12);
  EXPECT_EQ(r.active_term, 0);
}

TEST(TargetRateDiscreteTest, TwoHalves) {
  for (int64_t n : {4, 100, 10000}) {
    const DiscreteRateReport r = *TargetRateDiscrete({0.5, 0.5}, n, 1, 0);
    EXPECT_NEAR(r.statistical_term, 1 / std::sqrt(static_cast<double>(n)),
                1e-15);
    EXPECT_EQ(r.inactive_term, 0);
    EXPECT_NEAR(r.active_term, *Kappa(1, 0, n), 1e-18);
  }
}

TEST(TargetRateDiscreteTest, PointMassWithoutPrivacyIsZero) {
  EXPECT_EQ(TargetRateDiscrete({0, 1, 0}, 50, kInf, 0)->total(), 0);
}

TEST(TargetRateTreeTest, LevelsAreWeighted) {
  const Hst t = BinaryHst(2, 2.0);
  const auto p = DiscreteDistribution::Uniform(t.point_domain());
  const TreeRateReport r = *TargetRateTree(p, t, 100, 1, 0);
  ASSERT_EQ(r.levels.size(), 2u);
  EXPECT_EQ(r.levels[0].weight, 2);
  EXPECT_EQ(r.levels[1].weight, 1);
  const DiscreteRateReport top = *TargetRateDiscrete({0.5, 0.5}, 100, 1, 0);
  EXPECT_NEAR(r.levels[0].value, 2 * top.total(), 1e-15);
  EXPECT_NEAR(r.sum, r.levels[0].value + r.levels[1].value, 1e-15);
  EXPECT_EQ(r.max, std::max(r.levels[0].value, r.levels[1].value));
}

// At n = 10^6 the inner threshold 192 ln(n / beta) / n is below 1, so the
// path of the point mass is active and everything else is empty.
TEST(TreeUpperBoundTest, PointMassHasNoStatisticalOrInactiveTerm) {
  const Hst t = BinaryHst(3);
  const auto p = *DiscreteDistribution::PointMass(t.point_domain(), 6);
  const TreeUpperBoundReport r = *TreeUpperBound(p, t, 1000000, 1, 0.05);
  EXPECT_EQ(r.statistical_term, 0);
  EXPECT_EQ(r.inactive_term, 0);
  EXPECT_EQ(r.active_term, 0);
}

}  // namespace
}  // namespace wassdp
