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
#include <map>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "wassdp/distribution.h"
#include "wassdp/lambert_w.h"
#include "wassdp/laplace.h"
#include "wassdp/privacy.h"
#include "wassdp/private_cdf.h"
#include "wassdp/rng.h"

namespace wassdp {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(RngTest, SplitDependsOnlyOnSeedAndStream) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 17; ++i) a.NextU64();
  EXPECT_EQ(a.Split(3).NextU64(), b.Split(3).NextU64());
  EXPECT_NE(b.Split(3).NextU64(), b.Split(4).NextU64());
}

TEST(RngTest, UniformRanges) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.Uniform();
    const double v = rng.UniformPositive();
    EXPECT_GE(u, 0);
    EXPECT_LT(u, 1);
    EXPECT_GT(v, 0);
    EXPECT_LE(v, 1);
    EXPECT_LT(rng.UniformInt(7), 7u);
  }
}

TEST(LaplaceTest, RejectsBadScales) {
  Rng rng(1);
  EXPECT_FALSE(LaplaceNoise(-1, rng).ok());
  EXPECT_FALSE(LaplaceNoise(kInf, rng).ok());
  EXPECT_FALSE(LaplaceNoise(std::nan(""), rng).ok());
  EXPECT_FALSE(LaplaceNoise(0, rng).ok());
}

TEST(LaplaceTest, SameSeedSameDraws) {
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(*LaplaceNoise(2.5, a), *LaplaceNoise(2.5, b));
  }
}

TEST(LaplaceTest, MomentsAndTail) {
  // Lap(s): mean 0, variance 2 s^2, P(|X| > s ln 40) = 1/40.
  Rng rng(2026);
  const double s = 1.0;
  const int n = 1000000;
  double sum = 0, sum_sq = 0;
  int tail = 0;
  const double t = s * std::log(2 / 0.05);
  for (int i = 0; i < n; ++i) {
    const double x = *LaplaceNoise(s, rng);
    sum += x;
    sum_sq += x * x;
    tail += std::abs(x) > t;
  }
  EXPECT_NEAR(sum / n, 0, 0.01);
  EXPECT_NEAR(sum_sq / n, 2 * s * s, 0.02);
  EXPECT_NEAR(static_cast<double>(tail) / n, 0.025, 0.002);
}

TEST(LaplaceTest, ShiftByOneIsEpsilonIndistinguishable) {
  // Histogram the mechanism x + Lap(1/eps) on inputs 0 and 1 and check the
  // bin frequency ratio stays near e^eps wherever bins are well populated.
  const double eps = 1.0;
  const int n = 400000;
  Rng r0(1), r1(2);
  std::map<int, int> h0, h1;
  for (int i = 0; i < n; ++i) {
    ++h0[static_cast<int>(std::floor(4 * (0 + SampleLaplace(1 / eps, r0))))];
    ++h1[static_cast<int>(std::floor(4 * (1 + SampleLaplace(1 / eps, r1))))];
  }
  int checked = 0;
  for (const auto& [bin, c0] : h0) {
    const int c1 = h1[bin];
    if (c0 < 2000 || c1 < 2000) continue;
    ++checked;
    const double ratio = static_cast<double>(c0) / c1;
    EXPECT_LE(ratio, std::exp(eps) * 1.1) << bin;
    EXPECT_GE(ratio, std::exp(-eps) / 1.1) << bin;
  }
  EXPECT_GE(checked, 10);
}

TEST(LaplaceTest, ScaleHelper) {
  EXPECT_EQ(LaplaceScale(2, 0.5), 4);
  EXPECT_EQ(LaplaceScale(2, kInf), 0);
  Rng rng(3);
  const uint64_t before = Rng(3).NextU64();
  EXPECT_EQ(SampleLaplace(0, rng), 0);
  EXPECT_EQ(rng.NextU64(), before);
}

TEST(LambertWTest, KnownValues) {
  EXPECT_EQ(*LambertW(0), 0);
  EXPECT_NEAR(*LambertW(std::exp(1.0)), 1, 1e-14);
  EXPECT_NEAR(*LambertW(2 * std::exp(2.0)), 2, 1e-14);
  // Omega constant.
  EXPECT_NEAR(*LambertW(1), 0.5671432904097838, 1e-15);
  EXPECT_EQ(*LambertW(kInf), kInf);
  EXPECT_FALSE(LambertW(-0.1).ok());
  EXPECT_FALSE(LambertW(std::nan("")).ok());
}

TEST(LambertWTest, AgreesWithBisectionOnLogGrid) {
  for (int i = 0; i < 10000; ++i) {
    const double x = std::pow(10.0, -8 + 16.0 * i / 9999);
    double lo = 0, hi = std::max(1.0, std::log1p(x));
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (mid * std::exp(mid) < x ? lo : hi) = mid;
    }
    const double w = *LambertW(x);
    EXPECT_NEAR(w, lo, 1e-12 * std::max(1.0, lo)) << x;
  }
}

TEST(KappaTest, FrozenValues) {
  // Pure DP: 0.6 / (10 eps n).
  EXPECT_NEAR(*Kappa(1, 0, 1000), 6e-5, 1e-19);
  EXPECT_NEAR(*Kappa(1, 0, 100), 6e-4, 1e-18);
  EXPECT_NEAR(*Kappa(1, 0, 1), 0.06, 1e-16);
  // W(e) = 1 is above 0.6.
  EXPECT_NEAR(*Kappa(1, 0.45 / std::exp(1.0), 1), 0.06, 1e-16);
  // W(0.9) = 0.52983296563343... < 0.6.
  EXPECT_NEAR(*Kappa(1, 0.5, 1000), 5.298329656334344e-05, 1e-18);
  // W(450000) is far above 0.6.
  EXPECT_NEAR(*Kappa(1, 1e-6, 1000), 6e-5, 1e-19);
  EXPECT_EQ(*Kappa(kInf, 0, 1000), 0);
}

TEST(KappaTest, InverseInEpsilonTimesN) {
  for (double eps : {0.1, 1.0, 3.0}) {
    for (int64_t n : {10, 1000, 100000}) {
      EXPECT_NEAR(*Kappa(eps, 0, 2 * n), *Kappa(eps, 0, n) / 2, 1e-18);
      EXPECT_NEAR(*Kappa(2 * eps, 0, n), *Kappa(eps, 0, n) / 2, 1e-18);
    }
  }
}

TEST(KappaTest, RejectsBadParameters) {
  EXPECT_FALSE(Kappa(0, 0, 10).ok());
  EXPECT_FALSE(Kappa(1, -0.1, 10).ok());
  EXPECT_FALSE(Kappa(1, 0, 0).ok());
}

TEST(LedgerTest, ExactTotals) {
  PrivacyLedger ledger;
  for (int i = 0; i < 11; ++i) ledger.Record("m", 0.1, 0);
  EXPECT_EQ(ledger.total_epsilon(), 1.1);
  EXPECT_EQ(ledger.total_delta(), 0);
  EXPECT_EQ(ExactSum(std::vector<double>(10, 0.1)), 1.0);
  EXPECT_EQ(ExactSum({1e100, 1.0, -1e100}), 1.0);
  EXPECT_EQ(ExactSum({0.5, kInf}), kInf);
  EXPECT_EQ(ExactSum({}), 0);
}

TEST(IsotonicFitTest, PoolsViolators) {
  EXPECT_THAT(IsotonicFit({1, 3, 2, 4}), ElementsAre(1, 2.5, 2.5, 4));
  EXPECT_THAT(IsotonicFit({3, 2, 1}), ElementsAre(2, 2, 2));
  EXPECT_THAT(IsotonicFit({0.1, 0.2}), ElementsAre(0.1, 0.2));
}

TEST(ScanQuantilesTest, FirstIndexReachingEachLevel) {
  EXPECT_THAT(ScanQuantiles({0.1, 0.3, 0.3, 0.8, 1.0}, {0.1, 0.2, 0.5, 0.95}),
              ElementsAre(0, 1, 3, 4));
}

TEST(PrivateCdfTest, InfiniteEpsilonIsExact) {
  const GridDomain g = *GridDomain::Create(0, 9, 1);
  const Dataset d = *MakeDataset(g, {0, 2, 2, 5, 9});
  Rng rng(1);
  PrivacyLedger ledger;
  const PrivateCdfResult r = *PrivateCdf(d, g, kInf, rng, &ledger);
  const std::vector<double> exact = {0.2, 0.2, 0.6, 0.6, 0.6,
                                     0.8, 0.8, 0.8, 0.8, 1.0};
  for (int i = 0; i < 10; ++i) {
    EXPECT_NEAR(r.raw[i], exact[i], 1e-15);
    EXPECT_NEAR(r.monotone[i], exact[i], 1e-15);
  }
  EXPECT_EQ(r.depth, 4);
  EXPECT_EQ(r.noise_scale, 0);
  EXPECT_EQ(ledger.total_epsilon(), kInf);
}

TEST(PrivateCdfTest, MonotoneClippedAndEndsAtOne) {
  const GridDomain g = *GridDomain::Create(0, 999, 1);
  Rng data_rng(2);
  std::vector<int64_t> s;
  for (int i = 0; i < 200; ++i) s.push_back(data_rng.UniformInt(1000));
  const Dataset d = *MakeDataset(g, s);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    PrivacyLedger ledger;
    const PrivateCdfResult r = *PrivateCdf(d, g, 0.5, rng, &ledger);
    EXPECT_EQ(r.depth, 10);
    EXPECT_NEAR(r.noise_scale, 10 / (0.5 * 200), 1e-15);
    EXPECT_EQ(r.monotone.back(), 1.0);
    for (size_t i = 0; i < r.monotone.size(); ++i) {
      EXPECT_GE(r.monotone[i], 0);
      EXPECT_LE(r.monotone[i], 1);
      if (i > 0) EXPECT_GE(r.monotone[i], r.monotone[i - 1]);
    }
    ASSERT_EQ(ledger.entries().size(), 1u);
    EXPECT_EQ(ledger.total_epsilon(), 0.5);
  }
}

TEST(PrivateCdfTest, SameSeedSameOutput) {
  const GridDomain g = *GridDomain::Create(0, 99, 1);
  const Dataset d = *MakeDataset(g, {3, 50, 50, 70});
  Rng a(7), b(7);
  EXPECT_EQ(PrivateCdf(d, g, 1, a, nullptr)->raw,
            PrivateCdf(d, g, 1, b, nullptr)->raw);
}

// Replacing one record moves two leaf counts, so two nodes per level change
// and the release is 2 eps indistinguishable under replace-one neighbors.
TEST(PrivateCdfTest, NeighboringDatasetsGiveSimilarMedians) {
  const GridDomain g = *GridDomain::Create(0, 3, 1);
  const Dataset d0 = *MakeDataset(g, {0, 1, 1, 2, 3, 3, 0, 2});
  const Dataset d1 = *MakeDataset(g, {0, 1, 1, 2, 3, 3, 0, 3});
  const double eps = 0.5;
  const int trials = 60000;
  std::vector<int> c0(4), c1(4);
  Rng r0(10), r1(11);
  for (int t = 0; t < trials; ++t) {
    ++c0[(*PrivateQuantiles(d0, g, eps, {0.5}, r0, nullptr))[0]];
    ++c1[(*PrivateQuantiles(d1, g, eps, {0.5}, r1, nullptr))[0]];
  }
  for (int i = 0; i < 4; ++i) {
    if (c0[i] < 1000 || c1[i] < 1000) continue;
    const double ratio = static_cast<double>(c0[i]) / c1[i];
    EXPECT_LE(ratio, std::exp(2 * eps) * 1.1) << i;
    EXPECT_GE(ratio, std::exp(-2 * eps) / 1.1) << i;
  }
}

TEST(PrivateQuantilesTest, UniformMedianWithoutNoise) {
  const GridDomain g = *GridDomain::Create(1, 100, 1);
  std::vector<double> values;
  for (int v = 1; v <= 100; ++v) values.push_back(v);
  const Dataset d = *DatasetFromGridValues(g, values);
  Rng rng(1);
  const auto q = *PrivateQuantiles(d, g, kInf, {0.25, 0.5, 0.99}, rng, nullptr);
  EXPECT_EQ(g.point(q[0]), 25);
  EXPECT_EQ(g.point(q[1]), 50);
  EXPECT_EQ(g.point(q[2]), 99);
}

TEST(PrivateQuantilesTest, RejectsUnsortedLevels) {
  const GridDomain g = *GridDomain::Create(0, 9, 1);
  const Dataset d = *MakeDataset(g, {1, 2});
  Rng rng(1);
  EXPECT_FALSE(PrivateQuantiles(d, g, 1, {0.5, 0.2}, rng, nullptr).ok());
  EXPECT_FALSE(PrivateQuantiles(d, g, 0, {0.5}, rng, nullptr).ok());
}

}  // namespace
}  // namespace wassdp
