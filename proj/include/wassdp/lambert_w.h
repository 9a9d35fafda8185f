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

#ifndef WASSDP_LAMBERT_W_H_
#define WASSDP_LAMBERT_W_H_

#include <cstdint>

#include "absl/status/statusor.h"

namespace wassdp {

// Principal branch of the Lambert W function on [0, +inf]: the w >= 0 with
// w e^w = x.
absl::StatusOr<double> LambertW(double x);

// Privacy resolution (1 / (10 eps n)) min{W(0.45 eps / delta), 0.6}. With
// delta = 0 the argument is +inf and the minimum is 0.6. Infinite epsilon
// gives 0.
absl::StatusOr<double> Kappa(double epsilon, double delta, int64_t n);

}  // namespace wassdp

#endif  // WASSDP_LAMBERT_W_H_
