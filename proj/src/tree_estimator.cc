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

#include "wassdp/tree_estimator.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "wassdp/lambert_w.h"
#include "wassdp/laplace.h"
#include "wassdp/status_macros.h"

namespace wassdp {
namespace {

absl::Status CheckTree(const NodeFunction& g, const Hst& hst) {
  if (g.tree_fingerprint() != hst.fingerprint()) {
    return absl::InvalidArgumentError(
        "node function belongs to a different tree.");
  }
  return absl::OkStatus();
}

absl::Status CheckBeta(double beta) {
  if (!(beta > 0 && beta < 1)) {
    return absl::InvalidArgumentError("beta should be in (0, 1).");
  }
  return absl::OkStatus();
}

// 1 / (eps n), or 0 for infinite epsilon.
double InverseEpsN(double epsilon, int64_t n) {
  return std::isinf(epsilon) ? 0.0
                             : 1.0 / (epsilon * static_cast<double>(n));
}

}  // namespace

double TruncationThreshold(int64_t n, double beta) {
  const double dn = static_cast<double>(n);
  return 7 * std::log(dn / beta) / dn;
}

absl::StatusOr<double> ActiveThreshold(double epsilon, double delta,
                                       double beta, int64_t n) {
  RETURN_IF_ERROR(CheckBeta(beta));
  ASSIGN_OR_RETURN(double kappa, Kappa(epsilon, delta, n));
  return 2 * kappa + std::log(2 / beta) * InverseEpsN(epsilon, n);
}

absl::StatusOr<NodeFunction> EmpDistTruncated(const Dataset& data,
                                              const Hst& hst, double beta) {
  RETURN_IF_ERROR(CheckBeta(beta));
  if (data.samples.empty()) {
    return absl::InvalidArgumentError("dataset must be non-empty.");
  }
  if (data.domain != Domain(hst.point_domain())) {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset lives on ", DescribeDomain(data.domain),
                     ", not on the tree's points."));
  }
  std::vector<int64_t> counts(hst.num_nodes(), 0);
  for (int64_t x : data.samples) {
    const int32_t leaf = hst.leaf_of_point(x);
    if (leaf < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample point ", x, " has no leaf."));
    }
    ++counts[leaf];
  }
  for (int32_t v = hst.num_nodes() - 1; v > 0; --v) {
    counts[hst.node(v).parent] += counts[v];
  }
  const double n = static_cast<double>(data.n());
  const double cut = TruncationThreshold(data.n(), beta);
  NodeFunction g(hst);
  for (int32_t v = 0; v < hst.num_nodes(); ++v) {
    const double mass = static_cast<double>(counts[v]) / n;
    if (mass < cut) {
      g[v] = 0;
    } else if (mass > 1 - cut) {
      g[v] = 1;
    } else {
      g[v] = mass;
    }
  }
  g[0] = 1;
  return g;
}

absl::StatusOr<std::vector<int32_t>> LocateActiveNodes(
    const NodeFunction& ghat, double epsilon, double beta, double delta,
    int64_t n, const Hst& hst, Rng& rng, PrivacyLedger* ledger) {
  RETURN_IF_ERROR(CheckTree(ghat, hst));
  RETURN_IF_ERROR(ValidateEpsilon(epsilon));
  if (n < 1) return absl::InvalidArgumentError("n should be at least 1.");
  ASSIGN_OR_RETURN(double threshold,
                   ActiveThreshold(epsilon, delta, beta, n));
  const double scale = InverseEpsN(epsilon, n);
  std::vector<int32_t> active = {0};
  std::vector<int32_t> frontier = {0};
  for (int l = 1; l <= hst.depth() && !frontier.empty(); ++l) {
    std::vector<int32_t> next;
    for (int32_t v : frontier) {
      const Hst::Node& node = hst.node(v);
      for (int32_t c = node.first_child;
           c < node.first_child + node.num_children; ++c) {
        if (ghat.value(c) + SampleLaplace(scale, rng) > threshold) {
          next.push_back(c);
        }
      }
    }
    active.insert(active.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  if (ledger != nullptr) {
    for (int l = 1; l <= hst.depth(); ++l) {
      ledger->Record("locate_active_nodes", epsilon, 0.0,
                     absl::StrCat("level ", l));
    }
  }
  return active;
}

absl::StatusOr<NodeFunction> AddNoiseActive(
    const NodeFunction& ghat, const std::vector<int32_t>& active,
    double epsilon, int64_t n, const Hst& hst, Rng& rng,
    PrivacyLedger* ledger) {
  RETURN_IF_ERROR(CheckTree(ghat, hst));
  RETURN_IF_ERROR(ValidateEpsilon(epsilon));
  if (n < 1) return absl::InvalidArgumentError("n should be at least 1.");
  const double scale = InverseEpsN(epsilon, n);
  NodeFunction noisy(hst);
  for (int32_t v : active) {
    if (v < 0 || v >= hst.num_nodes()) {
      return absl::InvalidArgumentError(
          absl::StrCat("active node ", v, " is not in the tree."));
    }
    if (v == 0) continue;
    noisy[v] = ghat.value(v) + SampleLaplace(scale, rng);
  }
  noisy[0] = 1;
  if (ledger != nullptr) {
    ledger->Record("add_noise_active", epsilon, 0.0,
                   absl::StrCat(active.size(), " active nodes"));
  }
  return noisy;
}

absl::StatusOr<NodeFunction> ProjectNodeFunction(const NodeFunction& g,
                                                 const Hst& hst) {
  RETURN_IF_ERROR(CheckTree(g, hst));
  if (std::abs(g.value(0) - 1) > kMassTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("root value is ", g.value(0), ", expected 1."));
  }
  NodeFunction projected(hst);
  projected[0] = 1;
  for (int32_t v = 0; v < hst.num_nodes(); ++v) {
    const Hst::Node& node = hst.node(v);
    if (node.num_children == 0) continue;
    const int32_t begin = node.first_child;
    const int32_t end = begin + node.num_children;
    double total = 0;
    for (int32_t c = begin; c < end; ++c) total += std::max(g.value(c), 0.0);
    const double mass = projected.value(v);
    for (int32_t c = begin; c < end; ++c) {
      projected[c] = total > 0
                         ? mass * (std::max(g.value(c), 0.0) / total)
                         : mass / static_cast<double>(node.num_children);
    }
  }
  return projected;
}

absl::StatusOr<DiscreteDistribution> Projection(const NodeFunction& g,
                                                const Hst& hst) {
  ASSIGN_OR_RETURN(NodeFunction projected, ProjectNodeFunction(g, hst));
  std::vector<double> weights(hst.num_points(), 0.0);
  for (int32_t v = hst.level_begin(hst.depth()); v < hst.num_nodes(); ++v) {
    weights[hst.node(v).point] = projected.value(v);
  }
  return DiscreteDistribution::Create(hst.point_domain(), std::move(weights));
}

absl::StatusOr<TreeEstimate> PrivDensityEstTree(
    const Dataset& data, const Hst& hst, double epsilon, Rng& rng,
    const TreeEstimatorOptions& options) {
  RETURN_IF_ERROR(ValidateEpsilon(epsilon));
  PrivacyLedger ledger;
  ASSIGN_OR_RETURN(NodeFunction truncated,
                   EmpDistTruncated(data, hst, options.beta));
  ASSIGN_OR_RETURN(std::vector<int32_t> active,
                   LocateActiveNodes(truncated, epsilon, options.beta,
                                     options.delta, data.n(), hst, rng,
                                     &ledger));
  ASSIGN_OR_RETURN(NodeFunction noisy,
                   AddNoiseActive(truncated, active, epsilon, data.n(), hst,
                                  rng, &ledger));
  ASSIGN_OR_RETURN(DiscreteDistribution estimate, Projection(noisy, hst));
  return TreeEstimate{std::move(estimate), std::move(ledger),
                      std::move(active), std::move(truncated),
                      std::move(noisy)};
}

absl::StatusOr<DiscreteRateReport> TargetRateDiscrete(
    const std::vector<double>& p, int64_t n, double epsilon, double delta) {
  ASSIGN_OR_RETURN(double kappa, Kappa(epsilon, delta, n));
  const double dn = static_cast<double>(n);
  DiscreteRateReport report;
  int64_t heavy = 0;
  for (double x : p) {
    const double v = x * (1 - x);
    report.statistical_term += std::min(v, std::sqrt(std::max(v, 0.0) / dn));
    if (x < 2 * kappa) {
      report.inactive_term += x;
    } else {
      ++heavy;
    }
  }
  report.active_term =
      std::max<double>(0.0, static_cast<double>(heavy - 1) * kappa);
  return report;
}

absl::StatusOr<TreeRateReport> TargetRateTree(const DiscreteDistribution& p,
                                              const Hst& hst, int64_t n,
                                              double epsilon, double delta) {
  ASSIGN_OR_RETURN(NodeFunction g, InducedNodeFunction(p, hst));
  TreeRateReport report;
  for (int l = 1; l <= hst.depth(); ++l) {
    LevelRate level;
    level.level = l;
    level.weight = hst.edge_weight(l);
    ASSIGN_OR_RETURN(level.terms,
                     TargetRateDiscrete(LevelValues(g, hst, l), n, epsilon,
                                        delta));
    level.value = level.weight * level.terms.total();
    report.max = std::max(report.max, level.value);
    report.sum += level.value;
    report.levels.push_back(level);
  }
  return report;
}

ActiveSandwich ActiveSandwichThresholds(double epsilon, double beta,
                                        int64_t n) {
  const double dn = static_cast<double>(n);
  const double inv = InverseEpsN(epsilon, n);
  ActiveSandwich t;
  t.inner = std::max(2 * inv + 4 * std::log(2 / beta) * inv,
                     192 * std::log(dn / beta) / dn);
  t.outer = inv / 2;
  return t;
}

absl::StatusOr<TreeUpperBoundReport> TreeUpperBound(
    const DiscreteDistribution& p, const Hst& hst, int64_t n, double epsilon,
    double beta) {
  RETURN_IF_ERROR(ValidateEpsilon(epsilon));
  RETURN_IF_ERROR(CheckBeta(beta));
  if (n < 1) return absl::InvalidArgumentError("n should be at least 1.");
  ASSIGN_OR_RETURN(NodeFunction g, InducedNodeFunction(p, hst));
  const double dn = static_cast<double>(n);
  const double log_ratio = std::log(dn / beta);
  const ActiveSandwich t = ActiveSandwichThresholds(epsilon, beta, n);
  TreeUpperBoundReport report;
  for (int l = 1; l <= hst.depth(); ++l) {
    const double r = hst.edge_weight(l);
    int64_t heavy = 0;
    for (int32_t v = hst.level_begin(l); v < hst.level_end(l); ++v) {
      const double x = g.value(v);
      report.statistical_term +=
          r * std::min({x, 1 - x, std::sqrt(x * log_ratio / dn)});
      if (x <= t.inner) report.inactive_term += r * x;
      if (x > t.outer) ++heavy;
    }
    report.active_term += r * std::max<double>(0.0, heavy - 1) *
                          std::log(1 / beta) * InverseEpsN(epsilon, n);
  }
  return report;
}

}  // namespace wassdp
