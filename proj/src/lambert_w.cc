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

#include "wassdp/lambert_w.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "wassdp/privacy.h"

namespace wassdp {

absl::StatusOr<double> LambertW(double x) {
  if (std::isnan(x) || x < 0) {
    return absl::OutOfRangeError(
        "Lambert W is only provided on the principal branch for x >= 0.");
  }
  if (x == 0) return 0.0;
  if (std::isinf(x)) return x;
  if (x <= std::exp(1.0)) {
    // Halley iteration on w e^w - x, started from log1p(x).
    double w = std::log1p(x);
    for (int i = 0; i < 64; ++i) {
      const double ew = std::exp(w);
      const double f = w * ew - x;
      const double step =
          f / (ew * (w + 1) - (w + 2) * f / (2 * w + 2));
      w -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) break;
    }
    return w;
  }
  // Newton on w + ln w - ln x, which avoids overflow of e^w for large x.
  const double lx = std::log(x);
  double w = lx - std::log(lx);
  for (int i = 0; i < 64; ++i) {
    const double f = w + std::log(w) - lx;
    const double step = f / (1 + 1 / w);
    w -= step;
    if (std::abs(step) <= 1e-16 * w) break;
  }
  return w;
}

absl::StatusOr<double> Kappa(double epsilon, double delta, int64_t n) {
  if (absl::Status s = ValidateEpsilon(epsilon); !s.ok()) return s;
  if (!(delta >= 0 && delta <= 1)) {
    return absl::InvalidArgumentError("delta should be in [0, 1].");
  }
  if (n < 1) return absl::InvalidArgumentError("n should be at least 1.");
  if (std::isinf(epsilon)) return 0.0;
  double factor = 0.6;
  if (delta > 0) {
    absl::StatusOr<double> w = LambertW(0.45 * epsilon / delta);
    if (!w.ok()) return w.status();
    factor = std::min(*w, 0.6);
  }
  return factor / (10 * epsilon * static_cast<double>(n));
}

}  // namespace wassdp
