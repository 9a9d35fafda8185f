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

#include "wassdp/experiment.h"

#include <algorithm>

#include "absl/status/status.h"
#include "wassdp/onedim.h"
#include "wassdp/parallel.h"
#include "wassdp/status_macros.h"
#include "wassdp/wasserstein.h"

namespace wassdp {

DiscreteDistribution BimodalDistribution() {
  const GridDomain grid = *GridDomain::Create(0, 999, 1);
  std::vector<double> w(grid.size(), 0.0);
  w[430] = 1.0 / 3;
  w[440] = 2.0 / 3;
  return *DiscreteDistribution::Create(grid, std::move(w));
}

double MedianOf(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid]
                                : 0.5 * (values[mid - 1] + values[mid]);
}

absl::StatusOr<BimodalResult> RunBimodalExperiment(const BimodalConfig& config,
                                                   Rng& rng) {
  if (config.trials < 1) {
    return absl::InvalidArgumentError("trials should be at least 1.");
  }
  if (config.n < 1) return absl::InvalidArgumentError("n should be at least 1.");
  const DiscreteDistribution truth = BimodalDistribution();
  const GridDomain& grid = *truth.grid();
  struct Trial {
    absl::Status status;
    double psmm = 0;
    double priv = 0;
    std::vector<double> psmm_weights;
    std::vector<double> private_weights;
  };
  std::vector<Trial> trials(config.trials);
  ParallelFor(config.trials, config.jobs, [&](int64_t t) {
    Trial& out = trials[t];
    Rng stream = rng.Split(static_cast<uint64_t>(t));
    const Dataset sample = SampleDataset(truth, config.n, stream);
    absl::StatusOr<DiscreteDistribution> psmm =
        PsmmBaseline(sample, grid, config.buckets);
    if (!psmm.ok()) {
      out.status = psmm.status();
      return;
    }
    Estimate1dOptions options;
    options.k_override = config.k;
    absl::StatusOr<Estimate1dResult> priv =
        Estimate1d(sample, grid, config.epsilon, stream, options, nullptr);
    if (!priv.ok()) {
      out.status = priv.status();
      return;
    }
    out.psmm = *W1Cdf(truth, *psmm);
    out.priv = *W1Cdf(truth, priv->distribution);
    if (t == 0) {
      out.psmm_weights = psmm->weights();
      out.private_weights = priv->distribution.weights();
    }
  });
  std::vector<double> psmm_errors;
  std::vector<double> private_errors;
  int64_t in_band = 0;
  for (const Trial& t : trials) {
    RETURN_IF_ERROR(t.status);
    psmm_errors.push_back(t.psmm);
    private_errors.push_back(t.priv);
    if (t.psmm >= 10 && t.psmm <= 17) ++in_band;
  }
  ASSIGN_OR_RETURN(DiscreteDistribution first_psmm,
                   DiscreteDistribution::Create(grid, trials[0].psmm_weights));
  ASSIGN_OR_RETURN(
      DiscreteDistribution first_private,
      DiscreteDistribution::Create(grid, trials[0].private_weights));
  BimodalResult result{truth,
                       psmm_errors,
                       private_errors,
                       std::move(first_psmm),
                       std::move(first_private)};
  result.psmm_median = MedianOf(psmm_errors);
  result.private_median = MedianOf(private_errors);
  result.psmm_in_band =
      static_cast<double>(in_band) / static_cast<double>(config.trials);
  return result;
}

}  // namespace wassdp
