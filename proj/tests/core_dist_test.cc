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
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "wassdp/distribution.h"
#include "wassdp/divergence.h"
#include "wassdp/domain.h"
#include "wassdp/experiment.h"
#include "wassdp/rng.h"

namespace wassdp {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;

GridDomain Grid(double a, double b, double gamma) {
  return *GridDomain::Create(a, b, gamma);
}

DiscreteDistribution Dist(const Domain& domain, std::vector<double> w) {
  return *DiscreteDistribution::Create(domain, std::move(w));
}

DiscreteDistribution RandomDistribution(const Domain& domain, Rng& rng,
                                        double zero_chance = 0.0) {
  std::vector<double> w(DomainSize(domain));
  double total = 0;
  for (double& x : w) {
    x = rng.Uniform() < zero_chance ? 0.0 : rng.UniformPositive();
    total += x;
  }
  if (total == 0) w[0] = total = 1;
  for (double& x : w) x /= total;
  return Dist(domain, std::move(w));
}

TEST(GridDomainTest, CountsPointsAndEndsExactlyAtB) {
  const GridDomain g = Grid(0, 1, 0.1);
  EXPECT_EQ(g.size(), 11);
  EXPECT_EQ(g.point(10), 1.0);
  EXPECT_DOUBLE_EQ(g.point(3), 0.30000000000000004);
  EXPECT_EQ(*g.IndexOf(0.7), 7);
  EXPECT_FALSE(g.IndexOf(0.75).ok());
  EXPECT_EQ(*g.NearestIndex(0.74), 7);
  EXPECT_EQ(*g.NearestIndex(-0.04), 0);
  EXPECT_FALSE(g.NearestIndex(-0.2).ok());
}

TEST(GridDomainTest, RejectsBadParameters) {
  EXPECT_FALSE(GridDomain::Create(1, 0, 0.1).ok());
  EXPECT_FALSE(GridDomain::Create(0, 1, 0).ok());
  EXPECT_FALSE(GridDomain::Create(0, 1, 0.3).ok());
}

TEST(DistributionTest, ValidatesWeights) {
  const GridDomain g = Grid(0, 2, 1);
  EXPECT_FALSE(DiscreteDistribution::Create(g, {0.5, 0.5}).ok());
  EXPECT_FALSE(DiscreteDistribution::Create(g, {0.5, 0.6, -0.1}).ok());
  EXPECT_FALSE(DiscreteDistribution::Create(g, {0.5, 0.6, 0.1}).ok());
  EXPECT_TRUE(DiscreteDistribution::Create(g, {0.5, 0.5 - 1e-11, 0}).ok());
}

TEST(DistributionTest, CdfEndsAtOne) {
  const DiscreteDistribution p = Dist(Grid(0, 3, 1), {0.1, 0.2, 0.7, 0});
  EXPECT_THAT(p.Cdf(), ElementsAre(DoubleNear(0.1, 1e-15),
                                   DoubleNear(0.3, 1e-15), 1.0, 1.0));
}

TEST(EmpiricalTest, RepeatedValueIsPointMass) {
  const GridDomain g = Grid(0, 10, 1);
  const Dataset d = *MakeDataset(g, {5, 5, 5});
  const DiscreteDistribution p = *EmpiricalDistribution(d, g);
  EXPECT_EQ(p.weight(5), 1.0);
  EXPECT_EQ(p.Support(), std::vector<int64_t>{5});
}

TEST(EmpiricalTest, TwoEnds) {
  const GridDomain g = Grid(0, 10, 1);
  const DiscreteDistribution p =
      *EmpiricalDistribution(*MakeDataset(g, {0, 10}), g);
  EXPECT_EQ(p.weight(0), 0.5);
  EXPECT_EQ(p.weight(10), 0.5);
}

TEST(EmpiricalTest, OffGridSampleIsRejected) {
  const GridDomain g = Grid(0, 10, 1);
  EXPECT_FALSE(MakeDataset(g, {11}).ok());
  EXPECT_FALSE(DatasetFromGridValues(g, {2.5}).ok());
  EXPECT_FALSE(EmpiricalDistribution(*MakeDataset(g, {1}), Grid(0, 5, 1)).ok());
}

TEST(EmpiricalTest, BimodalSampleMassesNearTruth) {
  Rng rng(1);
  const DiscreteDistribution p = BimodalDistribution();
  const Dataset d = SampleDataset(p, 1600, rng);
  const DiscreteDistribution e = *EmpiricalDistribution(d, p.domain());
  EXPECT_EQ(e.Support(), (std::vector<int64_t>{430, 440}));
  // Binomial sd is about 0.0118; allow four of them.
  EXPECT_NEAR(e.weight(430), 1.0 / 3, 0.05);
  EXPECT_NEAR(e.weight(440), 2.0 / 3, 0.05);
}

TEST(EmpiricalTest, SumsToOneFromIntegerCounts) {
  const GridDomain g = Grid(0, 6, 1);
  Rng rng(2);
  std::vector<int64_t> s;
  for (int i = 0; i < 7777; ++i) s.push_back(rng.UniformInt(7));
  const DiscreteDistribution p = *EmpiricalDistribution(*MakeDataset(g, s), g);
  double total = 0;
  for (double w : p.weights()) total += w;
  EXPECT_NEAR(total, 1.0, 1e-15);
}

TEST(DiscretizeTest, RoundsToNearestPoint) {
  const GridDomain g = Grid(0, 1, 0.25);
  const Dataset d = *DiscretizeValues(g, {0.1, 0.13, 0.99, 0.0});
  EXPECT_THAT(d.samples, ElementsAre(0, 1, 4, 0));
}

TEST(QuantileTest, UniformMedian) {
  const DiscreteDistribution p = DiscreteDistribution::Uniform(Grid(1, 10, 1));
  EXPECT_EQ(*Quantile(p, 0.5), 5);
  EXPECT_EQ(*Quantile(p, 1.0), 10);
  EXPECT_EQ(*Quantile(p, 0.01), 1);
}

TEST(QuantileTest, PointMassAnyLevel) {
  const DiscreteDistribution p = *DiscreteDistribution::PointMass(Grid(0, 10, 1), 7);
  for (double a : {0.001, 0.3, 0.5, 1.0}) EXPECT_EQ(*Quantile(p, a), 7);
}

TEST(QuantileTest, BimodalAtPointThree) {
  EXPECT_EQ(*Quantile(BimodalDistribution(), 0.3), 430);
  EXPECT_EQ(*Quantile(BimodalDistribution(), 0.34), 440);
}

TEST(QuantileTest, RejectsLevelsOutsideUnitInterval) {
  const DiscreteDistribution p = DiscreteDistribution::Uniform(Grid(0, 3, 1));
  EXPECT_FALSE(QuantileIndex(p, 0).ok());
  EXPECT_FALSE(QuantileIndex(p, 1.5).ok());
  EXPECT_FALSE(QuantileIndex(p, -0.1).ok());
}

TEST(QuantileTest, MonotoneInLevel) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const DiscreteDistribution p = RandomDistribution(Grid(0, 20, 1), rng, 0.5);
    double prev_alpha = 0;
    int64_t prev = 0;
    for (int i = 0; i < 30; ++i) {
      const double alpha = prev_alpha + (1 - prev_alpha) * rng.UniformPositive() / 4;
      const int64_t q = *QuantileIndex(p, alpha);
      EXPECT_GE(q, prev);
      prev = q;
      prev_alpha = alpha;
    }
  }
}

TEST(RestrictTest, FullRangeIsIdentity) {
  Rng rng(4);
  const DiscreteDistribution p = RandomDistribution(Grid(0, 9, 1), rng);
  const DiscreteDistribution r = *Restrict(p, 0, 9);
  for (int64_t i = 0; i < 10; ++i) EXPECT_NEAR(r.weight(i), p.weight(i), 1e-15);
}

TEST(RestrictTest, PointMassInsideRange) {
  const DiscreteDistribution p = *DiscreteDistribution::PointMass(Grid(0, 10, 1), 5);
  const DiscreteDistribution r = *Restrict(p, 3, 8);
  EXPECT_EQ(r.Support(), std::vector<int64_t>{5});
}

// CDF definition applied pointwise: the atom at u carries F(u) and the atom
// at v carries 1 - F(v-), so uniform on {0..9} restricted to [2, 7] puts
// 0.3 at 2, 0.1 on 3..6 and 0.3 at 7.
TEST(RestrictTest, UniformOnTenPoints) {
  const DiscreteDistribution p = DiscreteDistribution::Uniform(Grid(0, 9, 1));
  const DiscreteDistribution r = *Restrict(p, 2, 7);
  const std::vector<double> expected = {0, 0, 0.3, 0.1, 0.1, 0.1,
                                        0.1, 0.3, 0, 0};
  for (int64_t i = 0; i < 10; ++i) {
    EXPECT_NEAR(r.weight(i), expected[i], 1e-15) << i;
  }
  const std::vector<double> f = r.Cdf();
  const std::vector<double> fp = p.Cdf();
  for (int64_t i = 2; i < 7; ++i) EXPECT_NEAR(f[i], fp[i], 1e-15);
}

TEST(RestrictTest, EqualEndpointsGivePointMass) {
  const DiscreteDistribution p = DiscreteDistribution::Uniform(Grid(0, 9, 1));
  EXPECT_EQ(Restrict(p, 4, 4)->Support(), std::vector<int64_t>{4});
  EXPECT_FALSE(Restrict(p, 5, 4).ok());
}

TEST(RestrictTest, Idempotent) {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const DiscreteDistribution p = RandomDistribution(Grid(0, 15, 1), rng, 0.4);
    const int64_t u = rng.UniformInt(16);
    const int64_t v = u + rng.UniformInt(16 - u);
    const DiscreteDistribution once = *Restrict(p, u, v);
    const DiscreteDistribution twice = *Restrict(once, u, v);
    for (int64_t i = 0; i < 16; ++i) {
      EXPECT_NEAR(once.weight(i), twice.weight(i), 1e-15);
    }
  }
}

TEST(DivergenceTest, IdenticalDistributionsAreZero) {
  Rng rng(6);
  const DiscreteDistribution p = RandomDistribution(Grid(0, 5, 1), rng);
  EXPECT_EQ(DInfinity(p, p)->value, 0);
  EXPECT_EQ(TotalVariation(p, p)->value, 0);
  EXPECT_NEAR(KlDivergence(p, p)->value, 0, 1e-15);
  EXPECT_NEAR(HellingerSquared(p, p)->value, 0, 1e-15);
}

TEST(DivergenceTest, SwappedThirds) {
  const GridDomain g = Grid(0, 1, 1);
  const auto p = Dist(g, {1.0 / 3, 2.0 / 3});
  const auto q = Dist(g, {2.0 / 3, 1.0 / 3});
  EXPECT_NEAR(DInfinity(p, q)->value, std::log(2.0), 1e-15);
}

TEST(DivergenceTest, DisjointSupports) {
  const GridDomain g = Grid(0, 1, 1);
  const auto p = Dist(g, {1, 0});
  const auto q = Dist(g, {0, 1});
  EXPECT_EQ(TotalVariation(p, q)->value, 1);
  EXPECT_EQ(HellingerSquared(p, q)->value, 1);
  EXPECT_TRUE(KlDivergence(p, q)->is_infinite());
  EXPECT_TRUE(DInfinity(p, q)->is_infinite());
  EXPECT_TRUE(DInfinity(p, Dist(g, {0.5, 0.5}))->is_infinite());
}

TEST(DivergenceTest, DomainMismatchIsAnError) {
  const auto p = DiscreteDistribution::Uniform(Grid(0, 1, 1));
  const auto q = DiscreteDistribution::Uniform(Grid(0, 2, 2));
  EXPECT_FALSE(TotalVariation(p, q).ok());
  EXPECT_FALSE(KlDivergence(p, q).ok());
  EXPECT_FALSE(HellingerSquared(p, q).ok());
  EXPECT_FALSE(DInfinity(p, q).ok());
}

TEST(DivergenceTest, FixedFivePointValues) {
  // Independent hand evaluation of the three formulas.
  const GridDomain g = Grid(0, 4, 1);
  const std::vector<double> a = {0.1, 0.2, 0.3, 0.15, 0.25};
  const std::vector<double> b = {0.3, 0.1, 0.2, 0.2, 0.2};
  double tv = 0, kl = 0, h2 = 0;
  for (int i = 0; i < 5; ++i) {
    tv += 0.5 * std::abs(a[i] - b[i]);
    kl += a[i] * std::log(a[i] / b[i]);
    const double d = std::sqrt(a[i]) - std::sqrt(b[i]);
    h2 += 0.5 * d * d;
  }
  const auto p = Dist(g, a);
  const auto q = Dist(g, b);
  EXPECT_NEAR(TotalVariation(p, q)->value, tv, 1e-15);
  EXPECT_NEAR(KlDivergence(p, q)->value, kl, 1e-14);
  EXPECT_NEAR(HellingerSquared(p, q)->value, h2, 1e-15);
  // Frozen values of the same sums.
  EXPECT_NEAR(tv, 0.25, 1e-15);
  EXPECT_NEAR(kl, 0.16304131663841265, 1e-12);
  EXPECT_NEAR(h2, 0.04361271022061824, 1e-12);
}

TEST(DivergenceTest, HellingerBelowKlAndTvOnRandomPairs) {
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    const GridDomain g = Grid(0, 4 + rng.UniformInt(8), 1);
    const auto p = RandomDistribution(g, rng, 0.2);
    const auto q = RandomDistribution(g, rng, 0.2);
    const double h2 = HellingerSquared(p, q)->value;
    EXPECT_LE(h2, KlDivergence(p, q)->value + 1e-15);
    EXPECT_LE(h2, TotalVariation(p, q)->value + 1e-15);
  }
}

TEST(MetricDomainTest, DistributionsLiveOnNamedSets) {
  const MetricDomain m{"cities", 3};
  const auto p = Dist(m, {0.2, 0.3, 0.5});
  EXPECT_FALSE(p.is_ordered());
  EXPECT_EQ(p.grid(), nullptr);
  EXPECT_FALSE(QuantileIndex(p, 0.5).ok());
  EXPECT_FALSE(Restrict(p, 0, 1).ok());
}

}  // namespace
}  // namespace wassdp
