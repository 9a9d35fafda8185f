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

#ifndef WASSDP_PRIVATE_CDF_H_
#define WASSDP_PRIVATE_CDF_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "wassdp/distribution.h"
#include "wassdp/privacy.h"
#include "wassdp/rng.h"

namespace wassdp {

struct PrivateCdfResult {
  // Noisy prefix sums, one per grid point.
  std::vector<double> raw;
  // Isotonic fit of `raw`, clipped to [0, 1], ending at exactly 1.
  std::vector<double> monotone;
  // Levels below the root of the dyadic tree over the padded domain.
  int depth = 0;
  // Laplace scale per node: depth / (eps n).
  double noise_scale = 0;
};

// Binary-tree mechanism for the empirical CDF on a grid. Each node of a
// complete dyadic tree over the grid cells holds its normalized count plus
// Lap(depth / (eps n)); the budget is split evenly over the `depth` levels
// and each record touches one node per level. Prefix sums use at most
// `depth` nodes. Records a single charge of eps on `ledger` when non-null.
absl::StatusOr<PrivateCdfResult> PrivateCdf(const Dataset& data,
                                            const GridDomain& grid,
                                            double epsilon, Rng& rng,
                                            PrivacyLedger* ledger);

// Least-squares non-decreasing fit (pool adjacent violators).
std::vector<double> IsotonicFit(const std::vector<double>& values);

// For each level, the first index whose CDF value reaches it. `alphas` must
// be ascending.
std::vector<int64_t> ScanQuantiles(const std::vector<double>& cdf,
                                   const std::vector<double>& alphas);

// Private quantiles of the sample at the ascending levels `alphas` in
// (0, 1), read off the monotone private CDF.
absl::StatusOr<std::vector<int64_t>> PrivateQuantiles(
    const Dataset& data, const GridDomain& grid, double epsilon,
    const std::vector<double>& alphas, Rng& rng, PrivacyLedger* ledger);

}  // namespace wassdp

#endif  // WASSDP_PRIVATE_CDF_H_
