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

#include "wassdp/finite_metric.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace wassdp {

FiniteMetric::FiniteMetric(std::string id, std::vector<std::string> labels,
                           std::vector<double> dist)
    : id_(std::move(id)), labels_(std::move(labels)), dist_(std::move(dist)) {
  const int64_t m = size();
  for (int64_t i = 0; i < m; ++i) {
    for (int64_t j = i + 1; j < m; ++j) {
      const double d = distance(i, j);
      diameter_ = std::max(diameter_, d);
      min_positive_ = min_positive_ == 0 ? d : std::min(min_positive_, d);
    }
  }
}

absl::StatusOr<FiniteMetric> FiniteMetric::Create(
    std::string id, std::vector<std::string> labels,
    std::vector<std::vector<double>> dist) {
  const size_t m = labels.size();
  if (m == 0) return absl::InvalidArgumentError("metric has no points.");
  if (dist.size() != m) {
    return absl::InvalidArgumentError(absl::StrCat(
        "distance matrix has ", dist.size(), " rows for ", m, " labels."));
  }
  std::vector<double> flat(m * m);
  for (size_t i = 0; i < m; ++i) {
    if (dist[i].size() != m) {
      return absl::InvalidArgumentError(absl::StrCat(
          "distance row ", i, " has ", dist[i].size(), " entries, expected ",
          m, "."));
    }
    for (size_t j = 0; j < m; ++j) {
      const double d = dist[i][j];
      if (!std::isfinite(d) || d < 0) {
        return absl::InvalidArgumentError(
            absl::StrCat("dist[", i, "][", j, "] = ", d, " is invalid."));
      }
      flat[i * m + j] = d;
    }
  }
  for (size_t i = 0; i < m; ++i) {
    if (flat[i * m + i] != 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("dist[", i, "][", i, "] must be 0."));
    }
    for (size_t j = i + 1; j < m; ++j) {
      if (flat[i * m + j] != flat[j * m + i]) {
        return absl::InvalidArgumentError(
            absl::StrCat("distance matrix is not symmetric at (", i, ", ", j,
                         ")."));
      }
      if (flat[i * m + j] == 0) {
        return absl::InvalidArgumentError(absl::StrCat(
            "distinct points ", i, " and ", j, " are at distance 0."));
      }
    }
  }
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      for (size_t k = 0; k < m; ++k) {
        const double direct = flat[i * m + k];
        const double via = flat[i * m + j] + flat[j * m + k];
        if (direct > via * (1 + 1e-9)) {
          return absl::InvalidArgumentError(absl::StrCat(
              "triangle inequality fails for (", i, ", ", j, ", ", k, ")."));
        }
      }
    }
  }
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      if (labels[i] == labels[j]) {
        return absl::InvalidArgumentError(
            absl::StrCat("duplicate label '", labels[i], "'."));
      }
    }
  }
  return FiniteMetric(std::move(id), std::move(labels), std::move(flat));
}

absl::StatusOr<FiniteMetric> FiniteMetric::FromPoints(
    std::string id, const std::vector<std::vector<double>>& points) {
  const size_t m = points.size();
  std::vector<std::string> labels(m);
  std::vector<std::vector<double>> dist(m, std::vector<double>(m, 0.0));
  for (size_t i = 0; i < m; ++i) {
    labels[i] = absl::StrCat(i);
    for (size_t j = 0; j < m; ++j) {
      if (points[j].size() != points[i].size()) {
        return absl::InvalidArgumentError("points have mixed dimensions.");
      }
      double sq = 0;
      for (size_t c = 0; c < points[i].size(); ++c) {
        const double d = points[i][c] - points[j][c];
        sq += d * d;
      }
      dist[i][j] = std::sqrt(sq);
    }
  }
  std::vector<double> flat(m * m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      // Mirror the upper triangle so the matrix is exactly symmetric.
      flat[i * m + j] = i <= j ? dist[i][j] : dist[j][i];
      if (i != j && flat[i * m + j] == 0) {
        return absl::InvalidArgumentError(
            absl::StrCat("points ", i, " and ", j, " coincide."));
      }
    }
  }
  // Euclidean distances satisfy the metric axioms, so skip the cubic check.
  return FiniteMetric(std::move(id), std::move(labels), std::move(flat));
}

absl::StatusOr<FiniteMetric> FiniteMetric::FromGrid(const GridDomain& grid) {
  const int64_t m = grid.size();
  if (m > 4096) {
    return absl::InvalidArgumentError(
        absl::StrCat("grid of ", m, " points is too large for a dense metric."));
  }
  std::vector<std::string> labels(m);
  std::vector<double> flat(m * m);
  for (int64_t i = 0; i < m; ++i) {
    labels[i] = absl::StrCat(grid.point(i));
    for (int64_t j = 0; j < m; ++j) {
      flat[i * m + j] = std::abs(static_cast<double>(i - j)) * grid.gamma();
    }
  }
  // Grid metrics are valid by construction, so skip the cubic check.
  return FiniteMetric(absl::StrCat("grid:", grid.a(), ":", grid.b(), ":",
                                   grid.gamma()),
                      std::move(labels), std::move(flat));
}

int64_t FiniteMetric::IndexOf(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : it - labels_.begin();
}

}  // namespace wassdp
