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

#include "wassdp/private_cdf.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "wassdp/laplace.h"

namespace wassdp {

absl::StatusOr<PrivateCdfResult> PrivateCdf(const Dataset& data,
                                            const GridDomain& grid,
                                            double epsilon, Rng& rng,
                                            PrivacyLedger* ledger) {
  if (absl::Status s = ValidateEpsilon(epsilon); !s.ok()) return s;
  if (data.samples.empty()) {
    return absl::InvalidArgumentError("dataset must be non-empty.");
  }
  if (data.domain != Domain(grid)) {
    return absl::InvalidArgumentError("dataset is not on the given grid.");
  }
  const int64_t m = grid.size();
  int depth = 0;
  while ((int64_t{1} << depth) < m) ++depth;
  const int64_t width = int64_t{1} << depth;
  const double n = static_cast<double>(data.n());

  PrivateCdfResult result;
  result.depth = depth;
  result.noise_scale =
      depth == 0 ? 0.0 : LaplaceScale(static_cast<double>(depth) / n, epsilon);

  // levels[l][j] covers leaves [j * 2^(depth - l), (j + 1) * 2^(depth - l)).
  std::vector<std::vector<double>> levels(depth + 1);
  levels[depth].assign(width, 0.0);
  for (int64_t s : data.samples) levels[depth][s] += 1.0;
  for (int l = depth - 1; l >= 0; --l) {
    levels[l].resize(int64_t{1} << l);
    for (size_t j = 0; j < levels[l].size(); ++j) {
      levels[l][j] = levels[l + 1][2 * j] + levels[l + 1][2 * j + 1];
    }
  }
  // Noise is kept apart from the integer counts so that an infinite epsilon
  // reproduces the empirical CDF exactly. The root count n is public and
  // gets no noise.
  std::vector<std::vector<double>> noise(depth + 1);
  for (int l = 1; l <= depth; ++l) {
    noise[l].resize(levels[l].size());
    for (double& z : noise[l]) z = SampleLaplace(result.noise_scale, rng);
  }

  result.raw.resize(m);
  for (int64_t i = 0; i < m; ++i) {
    const int64_t length = i + 1;
    if (length == width) {
      result.raw[i] = 1.0;
      continue;
    }
    double count = 0;
    double perturbation = 0;
    int64_t start = 0;
    for (int l = 1; l <= depth; ++l) {
      const int64_t size = int64_t{1} << (depth - l);
      if (length & size) {
        count += levels[l][start / size];
        perturbation += noise[l][start / size];
        start += size;
      }
    }
    result.raw[i] = count / n + perturbation;
  }
  // The total mass is public as well.
  result.raw[m - 1] = 1.0;

  result.monotone = IsotonicFit(result.raw);
  for (double& v : result.monotone) v = std::clamp(v, 0.0, 1.0);
  result.monotone[m - 1] = 1.0;

  if (ledger != nullptr) {
    ledger->Record("private_cdf", epsilon, 0.0,
                   absl::StrCat("binary tree, ", depth, " noisy levels at ",
                                "eps/", depth, " each"));
  }
  return result;
}

std::vector<double> IsotonicFit(const std::vector<double>& values) {
  // Blocks of (mean, weight), merged while adjacent means decrease.
  std::vector<double> mean;
  std::vector<int64_t> weight;
  for (double v : values) {
    mean.push_back(v);
    weight.push_back(1);
    while (mean.size() > 1 && mean[mean.size() - 2] > mean.back()) {
      const size_t k = mean.size() - 1;
      const double total = mean[k - 1] * static_cast<double>(weight[k - 1]) +
                           mean[k] * static_cast<double>(weight[k]);
      weight[k - 1] += weight[k];
      mean[k - 1] = total / static_cast<double>(weight[k - 1]);
      mean.pop_back();
      weight.pop_back();
    }
  }
  std::vector<double> fit;
  fit.reserve(values.size());
  for (size_t b = 0; b < mean.size(); ++b) {
    fit.insert(fit.end(), weight[b], mean[b]);
  }
  return fit;
}

std::vector<int64_t> ScanQuantiles(const std::vector<double>& cdf,
                                   const std::vector<double>& alphas) {
  std::vector<int64_t> out;
  out.reserve(alphas.size());
  const int64_t last = static_cast<int64_t>(cdf.size()) - 1;
  int64_t t = 0;
  for (double alpha : alphas) {
    while (t < last && cdf[t] < alpha) ++t;
    out.push_back(t);
  }
  return out;
}

absl::StatusOr<std::vector<int64_t>> PrivateQuantiles(
    const Dataset& data, const GridDomain& grid, double epsilon,
    const std::vector<double>& alphas, Rng& rng, PrivacyLedger* ledger) {
  for (size_t r = 0; r < alphas.size(); ++r) {
    if (!(alphas[r] > 0 && alphas[r] < 1)) {
      return absl::InvalidArgumentError(
          absl::StrCat("quantile level ", alphas[r], " is not in (0, 1)."));
    }
    if (r > 0 && alphas[r] < alphas[r - 1]) {
      return absl::InvalidArgumentError("quantile levels must be ascending.");
    }
  }
  if (alphas.empty()) return std::vector<int64_t>();
  absl::StatusOr<PrivateCdfResult> cdf =
      PrivateCdf(data, grid, epsilon, rng, ledger);
  if (!cdf.ok()) return cdf.status();
  return ScanQuantiles(cdf->monotone, alphas);
}

}  // namespace wassdp
