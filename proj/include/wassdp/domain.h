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

#ifndef WASSDP_DOMAIN_H_
#define WASSDP_DOMAIN_H_

#include <cstdint>
#include <string>
#include <variant>

#include "absl/status/statusor.h"

namespace wassdp {

// Evenly spaced points {a, a + gamma, ..., b} on the real line.
class GridDomain {
 public:
  // (b - a) / gamma must be an integer up to a relative tolerance of 1e-9.
  static absl::StatusOr<GridDomain> Create(double a, double b, double gamma);

  double a() const { return a_; }
  double b() const { return b_; }
  double gamma() const { return gamma_; }
  int64_t size() const { return size_; }

  // Value of the i-th grid point. The last point is exactly b.
  double point(int64_t i) const {
    return i == size_ - 1 ? b_ : a_ + static_cast<double>(i) * gamma_;
  }

  // Index of x if x is a grid point (within 1e-9 * gamma), else an error.
  absl::StatusOr<int64_t> IndexOf(double x) const;

  // Nearest grid point to x. Values further than gamma / 2 outside [a, b]
  // are rejected.
  absl::StatusOr<int64_t> NearestIndex(double x) const;

  bool operator==(const GridDomain& other) const {
    return a_ == other.a_ && b_ == other.b_ && gamma_ == other.gamma_ &&
           size_ == other.size_;
  }
  bool operator!=(const GridDomain& other) const { return !(*this == other); }

 private:
  GridDomain(double a, double b, double gamma, int64_t size)
      : a_(a), b_(b), gamma_(gamma), size_(size) {}

  double a_;
  double b_;
  double gamma_;
  int64_t size_;
};

// An unordered domain of `size` points owned by a named finite metric.
struct MetricDomain {
  std::string id;
  int64_t size = 0;

  bool operator==(const MetricDomain& other) const {
    return id == other.id && size == other.size;
  }
  bool operator!=(const MetricDomain& other) const { return !(*this == other); }
};

using Domain = std::variant<GridDomain, MetricDomain>;

int64_t DomainSize(const Domain& domain);
bool IsOrdered(const Domain& domain);
std::string DescribeDomain(const Domain& domain);

}  // namespace wassdp

#endif  // WASSDP_DOMAIN_H_
