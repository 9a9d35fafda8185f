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

#ifndef WASSDP_LAPLACE_H_
#define WASSDP_LAPLACE_H_

#include <cmath>

#include "absl/status/statusor.h"
#include "wassdp/rng.h"

namespace wassdp {

// One draw from Lap(scale), density exp(-|x| / scale) / (2 scale).
absl::StatusOr<double> LaplaceNoise(double scale, Rng& rng);

// Unchecked variant for mechanism internals. A zero scale returns 0 without
// consuming randomness, which is how an infinite epsilon disables noise.
double SampleLaplace(double scale, Rng& rng);

// Laplace scale for a query of the given sensitivity at privacy `epsilon`.
// Infinite epsilon maps to 0.
inline double LaplaceScale(double sensitivity, double epsilon) {
  return std::isinf(epsilon) ? 0.0 : sensitivity / epsilon;
}

}  // namespace wassdp

#endif  // WASSDP_LAPLACE_H_
