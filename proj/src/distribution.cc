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

#include "wassdp/distribution.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "wassdp/rng.h"
#include "wassdp/status_macros.h"

namespace wassdp {
namespace {

// Accumulated rounding in a CDF must not move a quantile past a point whose
// exact CDF equals alpha.
constexpr double kCdfSlack = 1e-12;

}  // namespace

absl::StatusOr<DiscreteDistribution> DiscreteDistribution::Create(
    Domain domain, std::vector<double> weights) {
  const int64_t size = DomainSize(domain);
  if (static_cast<int64_t>(weights.size()) != size) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", size, " weights for ",
                     DescribeDomain(domain), ", got ", weights.size(), "."));
  }
  double total = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "weight ", i, " = ", weights[i], " is not a non-negative number."));
    }
    total += weights[i];
  }
  if (std::abs(total - 1) > kMassTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("weights sum to ", total, ", expected 1."));
  }
  // Sums off by rounding only are kept verbatim so that stored
  // distributions reload bit for bit.
  if (std::abs(total - 1) > 1e-12) {
    for (double& w : weights) w /= total;
  }
  return DiscreteDistribution(std::move(domain), std::move(weights));
}

absl::StatusOr<DiscreteDistribution> DiscreteDistribution::PointMass(
    Domain domain, int64_t index) {
  const int64_t size = DomainSize(domain);
  if (index < 0 || index >= size) {
    return absl::OutOfRangeError(
        absl::StrCat("point index ", index, " outside domain of size ", size));
  }
  std::vector<double> weights(size, 0.0);
  weights[index] = 1.0;
  return DiscreteDistribution(std::move(domain), std::move(weights));
}

DiscreteDistribution DiscreteDistribution::Uniform(Domain domain) {
  const int64_t size = DomainSize(domain);
  std::vector<double> weights(size, 1.0 / static_cast<double>(size));
  return DiscreteDistribution(std::move(domain), std::move(weights));
}

std::vector<double> DiscreteDistribution::Cdf() const {
  std::vector<double> cdf(weights_.size());
  double running = 0;
  for (size_t i = 0; i < weights_.size(); ++i) {
    running += weights_[i];
    cdf[i] = std::min(running, 1.0);
  }
  // From the last support point on the CDF is exactly 1.
  for (size_t i = cdf.size(); i > 0; --i) {
    cdf[i - 1] = 1.0;
    if (weights_[i - 1] > 0) break;
  }
  return cdf;
}

std::vector<int64_t> DiscreteDistribution::Support() const {
  std::vector<int64_t> support;
  for (size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] > 0) support.push_back(static_cast<int64_t>(i));
  }
  return support;
}

absl::StatusOr<Dataset> MakeDataset(Domain domain,
                                    std::vector<int64_t> samples) {
  if (samples.empty()) {
    return absl::InvalidArgumentError("dataset must be non-empty.");
  }
  const int64_t size = DomainSize(domain);
  for (size_t i = 0; i < samples.size(); ++i) {
    if (samples[i] < 0 || samples[i] >= size) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample ", i, " has index ", samples[i],
                       " outside ", DescribeDomain(domain), "."));
    }
  }
  return Dataset{std::move(domain), std::move(samples)};
}

absl::StatusOr<Dataset> DiscretizeValues(const GridDomain& grid,
                                         const std::vector<double>& values) {
  std::vector<int64_t> samples;
  samples.reserve(values.size());
  for (double x : values) {
    ASSIGN_OR_RETURN(int64_t index, grid.NearestIndex(x));
    samples.push_back(index);
  }
  return MakeDataset(grid, std::move(samples));
}

absl::StatusOr<Dataset> DatasetFromGridValues(
    const GridDomain& grid, const std::vector<double>& values) {
  std::vector<int64_t> samples;
  samples.reserve(values.size());
  for (double x : values) {
    ASSIGN_OR_RETURN(int64_t index, grid.IndexOf(x));
    samples.push_back(index);
  }
  return MakeDataset(grid, std::move(samples));
}

absl::StatusOr<DiscreteDistribution> EmpiricalDistribution(
    const Dataset& data, const Domain& domain) {
  if (data.domain != domain) {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset lives on ", DescribeDomain(data.domain),
                     " but the target is ", DescribeDomain(domain), "."));
  }
  if (data.samples.empty()) {
    return absl::InvalidArgumentError("dataset must be non-empty.");
  }
  const int64_t size = DomainSize(domain);
  std::vector<int64_t> counts(size, 0);
  for (int64_t s : data.samples) {
    if (s < 0 || s >= size) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample index ", s, " is not a domain point."));
    }
    ++counts[s];
  }
  std::vector<double> weights(size);
  const double n = static_cast<double>(data.n());
  for (int64_t i = 0; i < size; ++i) {
    weights[i] = static_cast<double>(counts[i]) / n;
  }
  return DiscreteDistribution::Create(domain, std::move(weights));
}

Dataset SampleDataset(const DiscreteDistribution& p, int64_t n, Rng& rng) {
  std::vector<double> cdf;
  cdf.reserve(p.size());
  double running = 0;
  for (double w : p.weights()) {
    running += w;
    cdf.push_back(running);
  }
  std::vector<int64_t> samples(n);
  const int64_t last = p.Support().back();
  for (int64_t i = 0; i < n; ++i) {
    const double u = rng.Uniform() * running;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    samples[i] = std::min<int64_t>(it - cdf.begin(), last);
  }
  return Dataset{p.domain(), std::move(samples)};
}

int64_t QuantileIndexFromCdf(const std::vector<double>& cdf, double alpha) {
  const int64_t size = static_cast<int64_t>(cdf.size());
  if (alpha <= 0) {
    for (int64_t i = 0; i < size; ++i) {
      if (cdf[i] > 0) return i;
    }
    return size - 1;
  }
  const auto it =
      std::lower_bound(cdf.begin(), cdf.end(), alpha - kCdfSlack);
  return std::min<int64_t>(it - cdf.begin(), size - 1);
}

absl::StatusOr<int64_t> QuantileIndex(const DiscreteDistribution& p,
                                      double alpha) {
  if (!p.is_ordered()) {
    return absl::InvalidArgumentError("quantiles need an ordered domain.");
  }
  if (!(alpha > 0 && alpha <= 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("quantile level ", alpha, " is not in (0, 1]."));
  }
  return QuantileIndexFromCdf(p.Cdf(), alpha);
}

absl::StatusOr<double> Quantile(const DiscreteDistribution& p, double alpha) {
  ASSIGN_OR_RETURN(int64_t index, QuantileIndex(p, alpha));
  return p.grid()->point(index);
}

absl::StatusOr<DiscreteDistribution> Restrict(const DiscreteDistribution& p,
                                              int64_t u, int64_t v) {
  if (!p.is_ordered()) {
    return absl::InvalidArgumentError("restriction needs an ordered domain.");
  }
  if (u > v) {
    return absl::InvalidArgumentError(
        absl::StrCat("restriction needs u <= v, got ", u, " > ", v, "."));
  }
  if (u < 0 || v >= p.size()) {
    return absl::OutOfRangeError("restriction endpoints outside the domain.");
  }
  if (u == v) return DiscreteDistribution::PointMass(p.domain(), u);
  std::vector<double> weights(p.size(), 0.0);
  double below = 0;  // F(u-)
  for (int64_t i = 0; i < u; ++i) below += p.weight(i);
  double above = 0;  // 1 - F(v-)
  for (int64_t i = v; i < p.size(); ++i) above += p.weight(i);
  weights[u] = below + p.weight(u);
  for (int64_t i = u + 1; i < v; ++i) weights[i] = p.weight(i);
  weights[v] = above;
  return DiscreteDistribution::Create(p.domain(), std::move(weights));
}

bool SameDomain(const DiscreteDistribution& p, const DiscreteDistribution& q) {
  return p.domain() == q.domain();
}

}  // namespace wassdp
