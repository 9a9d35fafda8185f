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

#ifndef WASSDP_WASSERSTEIN_H_
#define WASSDP_WASSERSTEIN_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "absl/status/statusor.h"
#include "wassdp/distribution.h"
#include "wassdp/finite_metric.h"
#include "wassdp/hst.h"
#include "wassdp/node_function.h"

namespace wassdp {

// Largest |supp P| * |supp Q| accepted by the exact solver.
inline constexpr int64_t kMaxExactPairs = 10000;

// 1-Wasserstein distance on a common grid: sum over cells of
// |F_P - F_Q| * gamma. Exact for grid-supported distributions.
absl::StatusOr<double> W1Cdf(const DiscreteDistribution& p,
                             const DiscreteDistribution& q);

// Tree formula sum over non-root nodes of r(node) |G_P - G_Q|. Both
// functions must come from distributions on `hst`.
absl::StatusOr<double> W1Tree(const NodeFunction& gp, const NodeFunction& gq,
                              const Hst& hst);

// Exact optimal transport cost between distributions on `metric`.
absl::StatusOr<double> W1Exact(const DiscreteDistribution& p,
                               const DiscreteDistribution& q,
                               const FiniteMetric& metric);

// Exact optimal transport on a grid with ground cost |x - y|.
absl::StatusOr<double> W1ExactGrid(const DiscreteDistribution& p,
                                   const DiscreteDistribution& q);

// Transportation problem between supply vectors `p` and `q` (equal totals)
// under cost(i, j), solved by successive shortest paths.
absl::StatusOr<double> SolveTransport(
    const std::vector<double>& p, const std::vector<double>& q,
    const std::function<double(int64_t, int64_t)>& cost);

}  // namespace wassdp

#endif  // WASSDP_WASSERSTEIN_H_
