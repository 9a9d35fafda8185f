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

#include "wassdp/divergence.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace wassdp {
namespace {

absl::Status CheckSameDomain(const DiscreteDistribution& p,
                             const DiscreteDistribution& q) {
  if (!SameDomain(p, q)) {
    return absl::InvalidArgumentError(
        absl::StrCat("domain mismatch: ", DescribeDomain(p.domain()), " vs ",
                     DescribeDomain(q.domain()), "."));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<DivergenceValue> DInfinity(const DiscreteDistribution& p,
                                          const DiscreteDistribution& q) {
  if (absl::Status s = CheckSameDomain(p, q); !s.ok()) return s;
  double worst = 0;
  for (int64_t i = 0; i < p.size(); ++i) {
    const double a = p.weight(i);
    const double b = q.weight(i);
    if (a == 0 && b == 0) continue;
    if (a == 0 || b == 0) return DivergenceValue::Infinite();
    worst = std::max(worst, std::abs(std::log(a) - std::log(b)));
  }
  return DivergenceValue{worst};
}

absl::StatusOr<DivergenceValue> TotalVariation(const DiscreteDistribution& p,
                                               const DiscreteDistribution& q) {
  if (absl::Status s = CheckSameDomain(p, q); !s.ok()) return s;
  double sum = 0;
  for (int64_t i = 0; i < p.size(); ++i) {
    sum += std::abs(p.weight(i) - q.weight(i));
  }
  return DivergenceValue{0.5 * sum};
}

absl::StatusOr<DivergenceValue> KlDivergence(const DiscreteDistribution& p,
                                             const DiscreteDistribution& q) {
  if (absl::Status s = CheckSameDomain(p, q); !s.ok()) return s;
  double sum = 0;
  for (int64_t i = 0; i < p.size(); ++i) {
    const double a = p.weight(i);
    if (a == 0) continue;
    const double b = q.weight(i);
    if (b == 0) return DivergenceValue::Infinite();
    sum += a * std::log(a / b);
  }
  // Rounding can leave a tiny negative sum when P is close to Q.
  return DivergenceValue{std::max(sum, 0.0)};
}

absl::StatusOr<DivergenceValue> HellingerSquared(
    const DiscreteDistribution& p, const DiscreteDistribution& q) {
  if (absl::Status s = CheckSameDomain(p, q); !s.ok()) return s;
  double sum = 0;
  for (int64_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p.weight(i)) - std::sqrt(q.weight(i));
    sum += d * d;
  }
  return DivergenceValue{0.5 * sum};
}

}  // namespace wassdp
