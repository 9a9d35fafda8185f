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

#ifndef WASSDP_DIVERGENCE_H_
#define WASSDP_DIVERGENCE_H_

#include <cmath>
#include <limits>

#include "absl/status/statusor.h"
#include "wassdp/distribution.h"

namespace wassdp {

// A non-negative divergence value; +infinity encodes a support mismatch.
struct DivergenceValue {
  double value = 0.0;

  bool is_infinite() const { return std::isinf(value); }
  static DivergenceValue Infinite() {
    return {std::numeric_limits<double>::infinity()};
  }
};

// ln max_x max{P(x)/Q(x), Q(x)/P(x)} over the union of supports.
absl::StatusOr<DivergenceValue> DInfinity(const DiscreteDistribution& p,
                                          const DiscreteDistribution& q);

// Half the l1 distance.
absl::StatusOr<DivergenceValue> TotalVariation(const DiscreteDistribution& p,
                                               const DiscreteDistribution& q);

// sum_x P(x) ln(P(x)/Q(x)); infinite unless supp(P) is inside supp(Q).
absl::StatusOr<DivergenceValue> KlDivergence(const DiscreteDistribution& p,
                                             const DiscreteDistribution& q);

// Half the squared l2 distance between square-root densities.
absl::StatusOr<DivergenceValue> HellingerSquared(
    const DiscreteDistribution& p, const DiscreteDistribution& q);

}  // namespace wassdp

#endif  // WASSDP_DIVERGENCE_H_
