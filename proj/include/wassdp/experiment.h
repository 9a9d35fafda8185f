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

// Two-atom benchmark on {0, ..., 999}: P(430) = 1/3, P(440) = 2/3. Each
// trial draws n samples and compares the fixed-bucket baseline with the
// private quantile estimator.

#ifndef WASSDP_EXPERIMENT_H_
#define WASSDP_EXPERIMENT_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "wassdp/distribution.h"
#include "wassdp/rng.h"

namespace wassdp {

struct BimodalConfig {
  int64_t n = 1600;
  double epsilon = 1.0;
  int64_t k = 10;
  int64_t buckets = 40;
  int64_t trials = 50;
  int jobs = 1;
};

struct BimodalResult {
  DiscreteDistribution truth;
  std::vector<double> psmm_errors;
  std::vector<double> private_errors;
  // Estimates from trial 0, for plotting.
  DiscreteDistribution first_psmm;
  DiscreteDistribution first_private;
  double psmm_median = 0;
  double private_median = 0;
  // Share of trials with baseline error in [10, 17].
  double psmm_in_band = 0;
};

DiscreteDistribution BimodalDistribution();

// Trial t uses rng.Split(t) for both its sample and the private estimator.
absl::StatusOr<BimodalResult> RunBimodalExperiment(const BimodalConfig& config,
                                                   Rng& rng);

double MedianOf(std::vector<double> values);

}  // namespace wassdp

#endif  // WASSDP_EXPERIMENT_H_
