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

#include "wassdp/privacy.h"

#include <cmath>
#include <utility>

namespace wassdp {

absl::Status ValidateEpsilon(double epsilon) {
  if (std::isnan(epsilon) || !(epsilon > 0)) {
    return absl::InvalidArgumentError("epsilon should be positive.");
  }
  return absl::OkStatus();
}

absl::Status PrivacyParams::Validate() const {
  if (absl::Status s = ValidateEpsilon(epsilon); !s.ok()) return s;
  if (!(delta >= 0 && delta <= 1)) {
    return absl::InvalidArgumentError("delta should be in [0, 1].");
  }
  return absl::OkStatus();
}

void PrivacyLedger::Record(std::string mechanism, double epsilon,
                           double delta, std::string detail) {
  entries_.push_back(
      {std::move(mechanism), epsilon, delta, std::move(detail)});
}

double PrivacyLedger::total_epsilon() const {
  std::vector<double> values;
  values.reserve(entries_.size());
  for (const LedgerEntry& e : entries_) values.push_back(e.epsilon);
  return ExactSum(values);
}

double PrivacyLedger::total_delta() const {
  std::vector<double> values;
  values.reserve(entries_.size());
  for (const LedgerEntry& e : entries_) values.push_back(e.delta);
  return ExactSum(values);
}

double ExactSum(const std::vector<double>& values) {
  std::vector<double> partials;
  for (double x : values) {
    if (std::isinf(x)) return x;
    size_t i = 0;
    for (double y : partials) {
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0) partials[i++] = lo;
      x = hi;
    }
    partials.resize(i);
    partials.push_back(x);
  }
  if (partials.empty()) return 0.0;
  size_t n = partials.size() - 1;
  double hi = partials[n];
  double lo = 0;
  while (n > 0) {
    const double x = hi;
    const double y = partials[--n];
    hi = x + y;
    lo = y - (hi - x);
    if (lo != 0) break;
  }
  // Round half-even across the remaining partials.
  if (n > 0 && ((lo < 0 && partials[n - 1] < 0) ||
                (lo > 0 && partials[n - 1] > 0))) {
    const double y = lo * 2;
    const double x = hi + y;
    if (y == x - hi) hi = x;
  }
  return hi;
}

}  // namespace wassdp
