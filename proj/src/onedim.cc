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

#include "wassdp/onedim.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "wassdp/parallel.h"
#include "wassdp/private_cdf.h"
#include "wassdp/status_macros.h"
#include "wassdp/wasserstein.h"

namespace wassdp {

absl::StatusOr<KChoice> ChooseK(int64_t n, double epsilon,
                                const GridDomain& grid, double beta,
                                double c2, double c3) {
  RETURN_IF_ERROR(ValidateEpsilon(epsilon));
  if (n < 1) return absl::InvalidArgumentError("n should be at least 1.");
  if (!(beta > 0 && beta < 1)) {
    return absl::InvalidArgumentError("beta should be in (0, 1).");
  }
  if (!(c2 > 0) || !(c3 > 0)) {
    return absl::InvalidArgumentError("constants should be positive.");
  }
  KChoice choice;
  if (std::isinf(epsilon)) {
    choice.k = n;
    return choice;
  }
  const double range = (grid.b() - grid.a()) / grid.gamma();
  const double dn = static_cast<double>(n);
  const double l = std::log(range / beta);
  const double k = std::ceil(epsilon * dn /
                             (4 * c3 * l * l * l * std::log(dn / beta)));
  choice.k = std::max<int64_t>(1, static_cast<int64_t>(std::min(k, 1e15)));
  const double lt = std::log(range / (beta * epsilon));
  choice.sample_threshold = lt > 0 ? c2 * std::pow(lt, 4) / epsilon : 0.0;
  choice.below_sample_threshold = dn <= choice.sample_threshold;
  return choice;
}

std::vector<double> MidpointLevels(int64_t k) {
  std::vector<double> levels(k);
  for (int64_t r = 1; r <= k; ++r) {
    levels[r - 1] =
        static_cast<double>(2 * r - 1) / static_cast<double>(2 * k);
  }
  return levels;
}

absl::StatusOr<Estimate1dResult> Estimate1d(const Dataset& data,
                                            const GridDomain& grid,
                                            double epsilon, Rng& rng,
                                            const Estimate1dOptions& options,
                                            PrivacyLedger* ledger) {
  if (data.samples.empty()) {
    return absl::InvalidArgumentError("dataset must be non-empty.");
  }
  ASSIGN_OR_RETURN(KChoice choice, ChooseK(data.n(), epsilon, grid,
                                           options.beta, options.c2,
                                           options.c3));
  int64_t k = choice.k;
  if (options.k_override.has_value()) {
    if (*options.k_override < 1) {
      return absl::InvalidArgumentError("k should be at least 1.");
    }
    k = *options.k_override;
  }
  ASSIGN_OR_RETURN(std::vector<int64_t> quantiles,
                   PrivateQuantiles(data, grid, epsilon, MidpointLevels(k),
                                    rng, ledger));
  // Coincident quantiles pool their 1/k masses.
  std::vector<int64_t> counts(grid.size(), 0);
  for (int64_t q : quantiles) ++counts[q];
  std::vector<double> weights(grid.size(), 0.0);
  for (int64_t i = 0; i < grid.size(); ++i) {
    weights[i] = static_cast<double>(counts[i]) / static_cast<double>(k);
  }
  ASSIGN_OR_RETURN(DiscreteDistribution dist,
                   DiscreteDistribution::Create(grid, std::move(weights)));
  return Estimate1dResult{std::move(dist), choice, k, std::move(quantiles)};
}

absl::StatusOr<DiscreteDistribution> PsmmBaseline(const Dataset& data,
                                                  const GridDomain& grid,
                                                  int64_t buckets) {
  if (buckets < 1) {
    return absl::InvalidArgumentError("bucket count should be at least 1.");
  }
  if (data.samples.empty()) {
    return absl::InvalidArgumentError("dataset must be non-empty.");
  }
  if (data.domain != Domain(grid)) {
    return absl::InvalidArgumentError("dataset is not on the given grid.");
  }
  // With bucket width (b - a) / K, grid point i falls in bucket
  // floor(i K / (m - 1)), with b joining the last bucket. Bucket j starts at
  // a + j (b - a) / K and its first grid point is ceil(j (m - 1) / K).
  // Integer arithmetic keeps both exact.
  const int64_t steps = grid.size() - 1;
  std::vector<int64_t> counts(grid.size(), 0);
  for (int64_t s : data.samples) {
    const int64_t bucket =
        steps == 0 ? 0 : std::min<int64_t>(s * buckets / steps, buckets - 1);
    const int64_t anchor = (bucket * steps + buckets - 1) / buckets;
    ++counts[anchor];
  }
  std::vector<double> weights(grid.size());
  for (int64_t i = 0; i < grid.size(); ++i) {
    weights[i] = static_cast<double>(counts[i]) / static_cast<double>(data.n());
  }
  return DiscreteDistribution::Create(grid, std::move(weights));
}

absl::StatusOr<Rate1dReport> TargetRate1d(const DiscreteDistribution& p,
                                          int64_t n, double epsilon, double c,
                                          int64_t trials, Rng& rng, int jobs) {
  if (!p.is_ordered()) {
    return absl::InvalidArgumentError("rate needs an ordered domain.");
  }
  RETURN_IF_ERROR(ValidateEpsilon(epsilon));
  if (!(c > 0)) return absl::InvalidArgumentError("C should be positive.");
  if (n < 2) return absl::InvalidArgumentError("n should be at least 2.");
  if (trials < 1) {
    return absl::InvalidArgumentError("trials should be at least 1.");
  }
  const double tau =
      std::isinf(epsilon) ? 0.0 : 1.0 / (c * epsilon * static_cast<double>(n));
  if (tau >= 0.5) {
    return absl::InvalidArgumentError(absl::StrCat(
        "1/(C eps n) = ", tau, " >= 1/2 leaves no interquantile range."));
  }
  const std::vector<double> cdf = p.Cdf();
  Rate1dReport report;
  // At tau = 0 the quantiles are the ends of the support.
  report.q_low = QuantileIndexFromCdf(cdf, tau);
  report.q_high = QuantileIndexFromCdf(cdf, 1.0 - tau);
  const GridDomain& grid = *p.grid();
  report.interquantile_term =
      tau * (grid.point(report.q_high) - grid.point(report.q_low));
  ASSIGN_OR_RETURN(DiscreteDistribution restricted,
                   Restrict(p, report.q_low, report.q_high));
  ASSIGN_OR_RETURN(report.tail_term, W1Cdf(p, restricted));

  std::vector<double> errors(trials, 0.0);
  std::vector<absl::Status> statuses(trials);
  ParallelFor(trials, jobs, [&](int64_t t) {
    Rng stream = rng.Split(static_cast<uint64_t>(t));
    const Dataset sample = SampleDataset(p, n, stream);
    absl::StatusOr<DiscreteDistribution> empirical =
        EmpiricalDistribution(sample, p.domain());
    if (!empirical.ok()) {
      statuses[t] = empirical.status();
      return;
    }
    absl::StatusOr<DiscreteDistribution> empirical_restricted =
        Restrict(*empirical, report.q_low, report.q_high);
    if (!empirical_restricted.ok()) {
      statuses[t] = empirical_restricted.status();
      return;
    }
    absl::StatusOr<double> w = W1Cdf(restricted, *empirical_restricted);
    if (!w.ok()) {
      statuses[t] = w.status();
      return;
    }
    errors[t] = *w;
  });
  for (const absl::Status& s : statuses) RETURN_IF_ERROR(s);
  double mean = 0;
  for (double e : errors) mean += e;
  mean /= static_cast<double>(trials);
  report.empirical_term = mean / std::sqrt(std::log(static_cast<double>(n)));
  return report;
}

absl::StatusOr<BobkovLedouxReport> BobkovLedouxRate(
    const DiscreteDistribution& p, int64_t n) {
  if (!p.is_ordered()) {
    return absl::InvalidArgumentError("rate needs an ordered domain.");
  }
  if (n < 1) return absl::InvalidArgumentError("n should be at least 1.");
  const double gamma = p.grid()->gamma();
  const double cutoff = 1.0 / (4.0 * static_cast<double>(n));
  const std::vector<double> cdf = p.Cdf();
  BobkovLedouxReport report;
  double b_sum = 0;
  // F is constant on each of the m - 1 cells [x_i, x_{i+1}).
  for (size_t i = 0; i + 1 < cdf.size(); ++i) {
    const double v = cdf[i] * (1 - cdf[i]);
    if (v <= cutoff) report.a_n += 2 * v * gamma;
    if (v >= cutoff) b_sum += std::sqrt(v) * gamma;
  }
  report.b_n = b_sum / std::sqrt(static_cast<double>(n));
  return report;
}

}  // namespace wassdp
