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

#include "wassdp/laplace.h"

#include "absl/status/status.h"

namespace wassdp {

double SampleLaplace(double scale, Rng& rng) {
  if (scale == 0) return 0.0;
  // A sign bit plus an Exp(1) magnitude from the inverse CDF.
  const uint64_t bits = rng.NextU64();
  const double u = static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
  const double magnitude = -std::log(u) * scale;
  return (bits & 1) ? -magnitude : magnitude;
}

absl::StatusOr<double> LaplaceNoise(double scale, Rng& rng) {
  if (!(scale > 0) || std::isinf(scale)) {
    return absl::InvalidArgumentError("scale should be positive and finite.");
  }
  return SampleLaplace(scale, rng);
}

}  // namespace wassdp
