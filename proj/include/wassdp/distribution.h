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

#ifndef WASSDP_DISTRIBUTION_H_
#define WASSDP_DISTRIBUTION_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "wassdp/domain.h"

namespace wassdp {

// Tolerance on the total mass of user-supplied weights.
inline constexpr double kMassTolerance = 1e-9;

// A probability distribution over the points of a grid or a finite metric.
// Immutable after construction.
class DiscreteDistribution {
 public:
  // Weights must be non-negative and sum to 1 within kMassTolerance. They are
  // renormalized so that the stored sum is 1 up to rounding.
  static absl::StatusOr<DiscreteDistribution> Create(
      Domain domain, std::vector<double> weights);

  // Unit mass on point `index`.
  static absl::StatusOr<DiscreteDistribution> PointMass(Domain domain,
                                                        int64_t index);

  // Uniform over all domain points.
  static DiscreteDistribution Uniform(Domain domain);

  const Domain& domain() const { return domain_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(int64_t i) const { return weights_[i]; }
  int64_t size() const { return static_cast<int64_t>(weights_.size()); }

  bool is_ordered() const { return IsOrdered(domain_); }
  // Null for metric domains.
  const GridDomain* grid() const { return std::get_if<GridDomain>(&domain_); }

  // Cumulative distribution over domain indices; the last entry is exactly 1.
  // Only meaningful on ordered domains.
  std::vector<double> Cdf() const;

  // Indices with positive weight.
  std::vector<int64_t> Support() const;

 private:
  DiscreteDistribution(Domain domain, std::vector<double> weights)
      : domain_(std::move(domain)), weights_(std::move(weights)) {}

  Domain domain_;
  std::vector<double> weights_;
};

// A sample of domain points stored as domain indices.
struct Dataset {
  Domain domain;
  std::vector<int64_t> samples;

  int64_t n() const { return static_cast<int64_t>(samples.size()); }
};

// Checks every index against the domain and that the sample is non-empty.
absl::StatusOr<Dataset> MakeDataset(Domain domain,
                                    std::vector<int64_t> samples);

// Snaps real values to the nearest grid point.
absl::StatusOr<Dataset> DiscretizeValues(const GridDomain& grid,
                                         const std::vector<double>& values);

// Requires values that are grid points already.
absl::StatusOr<Dataset> DatasetFromGridValues(
    const GridDomain& grid, const std::vector<double>& values);

// Uniform distribution over the sample, computed from integer counts.
absl::StatusOr<DiscreteDistribution> EmpiricalDistribution(
    const Dataset& data, const Domain& domain);

// i.i.d. draws from P, via inverse-CDF lookup.
class Rng;
Dataset SampleDataset(const DiscreteDistribution& p, int64_t n, Rng& rng);

// Smallest index t with F(t) >= alpha. Requires alpha in (0, 1].
absl::StatusOr<int64_t> QuantileIndex(const DiscreteDistribution& p,
                                      double alpha);
absl::StatusOr<double> Quantile(const DiscreteDistribution& p, double alpha);

// Same as QuantileIndex on a precomputed CDF, with alpha = 0 read as the
// limit from above (the smallest support point). No validation.
int64_t QuantileIndexFromCdf(const std::vector<double>& cdf, double alpha);

// Restriction to [u, v] by domain index: the CDF is 0 below u, F on [u, v)
// and 1 from v on, so the clipped tails become atoms at u and v.
absl::StatusOr<DiscreteDistribution> Restrict(const DiscreteDistribution& p,
                                              int64_t u, int64_t v);

bool SameDomain(const DiscreteDistribution& p, const DiscreteDistribution& q);

}  // namespace wassdp

#endif  // WASSDP_DISTRIBUTION_H_
