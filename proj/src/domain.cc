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

#include "wassdp/domain.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace wassdp {

absl::StatusOr<GridDomain> GridDomain::Create(double a, double b,
                                              double gamma) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(gamma)) {
    return absl::InvalidArgumentError("grid parameters must be finite.");
  }
  if (!(b > a)) {
    return absl::InvalidArgumentError("grid requires b > a.");
  }
  if (!(gamma > 0)) {
    return absl::InvalidArgumentError("grid step gamma should be positive.");
  }
  const double steps = (b - a) / gamma;
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, steps)) {
    return absl::InvalidArgumentError(
        absl::StrCat("(b - a) / gamma = ", steps, " is not an integer."));
  }
  if (rounded > 1e9) {
    return absl::InvalidArgumentError("grid has more than 1e9 points.");
  }
  return GridDomain(a, b, gamma, static_cast<int64_t>(rounded) + 1);
}

absl::StatusOr<int64_t> GridDomain::IndexOf(double x) const {
  const double pos = (x - a_) / gamma_;
  const double rounded = std::round(pos);
  if (!std::isfinite(pos) || std::abs(pos - rounded) > 1e-9 * std::max(1.0, std::abs(pos)) ||
      rounded < 0 || rounded > static_cast<double>(size_ - 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("value ", x, " is not a point of the grid [", a_, ", ",
                     b_, "] with step ", gamma_, "."));
  }
  return static_cast<int64_t>(rounded);
}

absl::StatusOr<int64_t> GridDomain::NearestIndex(double x) const {
  if (!std::isfinite(x) || x < a_ - gamma_ / 2 || x > b_ + gamma_ / 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "value ", x, " lies outside the grid [", a_, ", ", b_, "]."));
  }
  const double pos = std::round((x - a_) / gamma_);
  return std::clamp<int64_t>(static_cast<int64_t>(pos), 0, size_ - 1);
}

int64_t DomainSize(const Domain& domain) {
  if (const auto* grid = std::get_if<GridDomain>(&domain)) return grid->size();
  return std::get<MetricDomain>(domain).size;
}

bool IsOrdered(const Domain& domain) {
  return std::holds_alternative<GridDomain>(domain);
}

std::string DescribeDomain(const Domain& domain) {
  if (const auto* grid = std::get_if<GridDomain>(&domain)) {
    return absl::StrCat("grid[", grid->a(), ", ", grid->b(), "; ",
                        grid->gamma(), "]");
  }
  const auto& metric = std::get<MetricDomain>(domain);
  return absl::StrCat("metric '", metric.id, "' (", metric.size, " points)");
}

}  // namespace wassdp
