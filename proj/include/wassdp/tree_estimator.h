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

#ifndef WASSDP_TREE_ESTIMATOR_H_
#define WASSDP_TREE_ESTIMATOR_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "wassdp/distribution.h"
#include "wassdp/hst.h"
#include "wassdp/node_function.h"
#include "wassdp/privacy.h"
#include "wassdp/rng.h"

namespace wassdp {

// 7 ln(n / beta) / n.
double TruncationThreshold(int64_t n, double beta);

// Survival threshold 2 kappa + ln(2 / beta) / (eps n) for noisy node masses.
absl::StatusOr<double> ActiveThreshold(double epsilon, double delta,
                                       double beta, int64_t n);

// Empirical node masses with small values rounded to 0 and values near 1
// rounded to 1: below 7 ln(n/beta)/n becomes 0, above 1 - 7 ln(n/beta)/n
// becomes 1. The root is exactly 1.
absl::StatusOr<NodeFunction> EmpDistTruncated(const Dataset& data,
                                              const Hst& hst, double beta);

// Top-down search for heavy nodes. Starting below the root, each child of a
// surviving node survives iff its value plus Lap(1 / (eps n)) exceeds
// ActiveThreshold; the search ends at the leaves or at an empty level.
// Charges eps per tree level, depth * eps in total, whether or not the
// search stops early. Returns surviving node ids, root included, ascending.
absl::StatusOr<std::vector<int32_t>> LocateActiveNodes(
    const NodeFunction& ghat, double epsilon, double beta, double delta,
    int64_t n, const Hst& hst, Rng& rng, PrivacyLedger* ledger);

// Ghat + Lap(1 / (eps n)) on the active non-root nodes, 0 elsewhere, root 1.
// Charges eps.
absl::StatusOr<NodeFunction> AddNoiseActive(
    const NodeFunction& ghat, const std::vector<int32_t>& active,
    double epsilon, int64_t n, const Hst& hst, Rng& rng,
    PrivacyLedger* ledger);

// Top-down rescaling into a distribution-induced node function: negative
// values count as 0, each parent's mass is shared in proportion to its
// children's values, or evenly when they are all 0.
absl::StatusOr<NodeFunction> ProjectNodeFunction(const NodeFunction& g,
                                                 const Hst& hst);

// Leaf masses of ProjectNodeFunction as a distribution on the tree's points.
absl::StatusOr<DiscreteDistribution> Projection(const NodeFunction& g,
                                                const Hst& hst);

struct TreeEstimatorOptions {
  double beta = 0.05;
  // Only enters through kappa; 0 for pure DP.
  double delta = 0.0;
};

struct TreeEstimate {
  DiscreteDistribution distribution;
  PrivacyLedger ledger;
  std::vector<int32_t> active;
  NodeFunction truncated;
  NodeFunction noisy;
};

// The full pipeline; the ledger totals (depth + 1) eps.
absl::StatusOr<TreeEstimate> PrivDensityEstTree(
    const Dataset& data, const Hst& hst, double epsilon, Rng& rng,
    const TreeEstimatorOptions& options = {});

struct DiscreteRateReport {
  double statistical_term = 0;
  double inactive_term = 0;
  double active_term = 0;

  double total() const {
    return statistical_term + inactive_term + active_term;
  }
};

// With kappa = Kappa(eps, delta, n):
// statistical = sum_x min{p(1-p), sqrt(p(1-p)/n)},
// inactive = sum of p(x) over p(x) < 2 kappa,
// active = max(0, (#{x : p(x) >= 2 kappa} - 1) kappa).
absl::StatusOr<DiscreteRateReport> TargetRateDiscrete(
    const std::vector<double>& p, int64_t n, double epsilon, double delta);

struct LevelRate {
  int level = 0;
  double weight = 0;
  DiscreteRateReport terms;
  // weight * terms.total().
  double value = 0;
};

struct TreeRateReport {
  std::vector<LevelRate> levels;
  double max = 0;
  double sum = 0;
};

// TargetRateDiscrete on each level's distribution, weighted by r_l.
absl::StatusOr<TreeRateReport> TargetRateTree(const DiscreteDistribution& p,
                                              const Hst& hst, int64_t n,
                                              double epsilon, double delta);

struct TreeUpperBoundReport {
  double statistical_term = 0;
  double inactive_term = 0;
  double active_term = 0;

  double total() const {
    return statistical_term + inactive_term + active_term;
  }
};

// Shape of the estimator's error bound, up to constants, with each node
// weighted by its edge weight:
// statistical = sum r min{p, 1 - p, sqrt(p ln(n/beta) / n)},
// inactive = sum of r G_P over nodes at or below
//   max{2/(eps n) + 4 ln(2/beta)/(eps n), 192 ln(n/beta)/n},
// active = sum_l r_l (#{nodes above 1/(2 eps n)} - 1) ln(1/beta) / (eps n).
absl::StatusOr<TreeUpperBoundReport> TreeUpperBound(
    const DiscreteDistribution& p, const Hst& hst, int64_t n, double epsilon,
    double beta);

// Inner and outer thresholds of the active-node guarantee:
// inner = max{2/(eps n) + 4 ln(2/beta)/(eps n), 192 ln(n/beta)/n},
// outer = 1 / (2 eps n).
struct ActiveSandwich {
  double inner = 0;
  double outer = 0;
};
ActiveSandwich ActiveSandwichThresholds(double epsilon, double beta,
                                        int64_t n);

}  // namespace wassdp

#endif  // WASSDP_TREE_ESTIMATOR_H_
