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

#ifndef WASSDP_FINITE_METRIC_H_
#define WASSDP_FINITE_METRIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "wassdp/domain.h"

namespace wassdp {

// M labeled points with a validated distance matrix.
class FiniteMetric {
 public:
  // Checks symmetry, zero diagonal, positive off-diagonal entries and the
  // triangle inequality (with a 1e-9 relative slack).
  static absl::StatusOr<FiniteMetric> Create(
      std::string id, std::vector<std::string> labels,
      std::vector<std::vector<double>> dist);

  // Euclidean distances between the given points.
  static absl::StatusOr<FiniteMetric> FromPoints(
      std::string id, const std::vector<std::vector<double>>& points);

  // The metric |x - y| on the points of a grid.
  static absl::StatusOr<FiniteMetric> FromGrid(const GridDomain& grid);

  const std::string& id() const { return id_; }
  int64_t size() const { return static_cast<int64_t>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int64_t i) const { return labels_[i]; }
  double distance(int64_t i, int64_t j) const { return dist_[i * size() + j]; }
  double diameter() const { return diameter_; }
  // Zero for a single point.
  double min_positive_distance() const { return min_positive_; }

  MetricDomain domain() const { return MetricDomain{id_, size()}; }

  // Index of `label`, or -1.
  int64_t IndexOf(const std::string& label) const;

 private:
  FiniteMetric(std::string id, std::vector<std::string> labels,
               std::vector<double> dist);

  std::string id_;
  std::vector<std::string> labels_;
  std::vector<double> dist_;
  double diameter_ = 0;
  double min_positive_ = 0;
};

}  // namespace wassdp

#endif  // WASSDP_FINITE_METRIC_H_
