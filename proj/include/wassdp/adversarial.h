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

// Generators of hard neighbors of a distribution, and the harness that
// compares measured estimator error with the target rates.

#ifndef WASSDP_ADVERSARIAL_H_
#define WASSDP_ADVERSARIAL_H_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "wassdp/distribution.h"
#include "wassdp/finite_metric.h"
#include "wassdp/rng.h"

namespace wassdp {

// Both 1-d generators work in mass coordinates: atom j owns the slice
// (F(x_{j-1}), F(x_j)] of [0, 1], and a piecewise-constant multiplier h on
// [0, 1] with integral 1 gives Q(x_j) = integral of h over that slice. Each
// Q(x_j) / P(x_j) is an average of h, so the ratio bounds of h carry over
// to every atom, and the masses add up to 1 without any correction.
struct Neighbor {
  DiscreteDistribution distribution;
  // True when the construction has nothing to move and Q = P.
  bool degenerate = false;
};

// h = 1/2 below mass 1/k, 1 in the middle, 3/2 from mass 1 - 1/k on.
// Degenerate when q_{1/k} = q_{1-1/k}.
absl::StatusOr<Neighbor> HardPrivacyNeighbor1d(const DiscreteDistribution& p,
                                               int64_t k);

// For 2 <= i <= floor(log2 n) - 2, h = 1 + sqrt(2^i / n) on
// (2^-i, 2^{1-i}] and 1 - sqrt(2^i / n) on the mirrored slice
// (1 - 2^{1-i}, 1 - 2^-i]; deeper slices get 3/2 and 1/2. Requires n >= 4.
absl::StatusOr<Neighbor> HardEmpiricalNeighbor1d(const DiscreteDistribution& p,
                                                 int64_t n);

// Support points grouped by s with P(x) in (2^{-s-1}, 2^{-s}].
std::map<int, std::vector<int64_t>> ScalePartition(
    const DiscreteDistribution& p);

struct AssouadNet {
  // Atoms paired up; each pair trades `perturbation` mass.
  std::vector<std::pair<int64_t, int64_t>> pairs;
  // One +1 / -1 entry per pair for each materialized corner.
  std::vector<std::vector<int>> corners;
  std::vector<DiscreteDistribution> members;
  // True when fewer than two atoms are active and the net is empty.
  bool degenerate = false;
};

// Atoms with P(x) >= 2 perturbation are active and are paired in a random
// order fixed by `pairing_seed`. Corner u moves `perturbation` mass into the
// first atom of pair j when u_j = +1 and into the second when u_j = -1.
// When 2^pairs <= max_corners every corner is listed, otherwise the all +1
// and all -1 corners followed by random ones. Two corners are
// 2 perturbation Hamming(u, v) apart in total variation.
absl::StatusOr<AssouadNet> AssouadNetDiscrete(const DiscreteDistribution& p,
                                              double perturbation,
                                              uint64_t pairing_seed,
                                              int max_corners = 64);

enum class EstimatorKind { kOneDim, kTree, kPsmm };

absl::StatusOr<EstimatorKind> ParseEstimatorKind(const std::string& name);
std::string EstimatorName(EstimatorKind kind);

struct RegretOptions {
  double beta = 0.05;
  double delta = 0.0;
  double c2 = 1.0;
  double c3 = 1.0;
  // Constant C of the 1-d target rate.
  double rate_constant = 1.0;
  int64_t psmm_buckets = 40;
  int64_t rate_trials = 200;
  int jobs = 1;
};

struct RegretReportResult {
  std::vector<double> errors;
  double measured_error_median = 0;
  double target_rate = 0;
  // Median error over target rate; 0 when both vanish.
  double ratio = 0;
  // Tree estimator only: depth of the sampled embedding.
  int tree_depth = 0;
};

// Median W1 error of `estimator` over `trials` samples of size n, compared
// with the 1-d target rate (1d, psmm) or the summed per-level tree rate
// (tree). Errors are measured in the original metric: the line for grid
// distributions, `metric` otherwise. On a grid the tree estimator runs on
// an embedding of the grid's own metric.
absl::StatusOr<RegretReportResult> RegretReport(
    const DiscreteDistribution& p, EstimatorKind estimator, int64_t n,
    double epsilon, int64_t trials, Rng& rng,
    const RegretOptions& options = {}, const FiniteMetric* metric = nullptr);

}  // namespace wassdp

#endif  // WASSDP_ADVERSARIAL_H_
