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

#include "wassdp/adversarial.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "wassdp/embedding.h"
#include "wassdp/experiment.h"
#include "wassdp/onedim.h"
#include "wassdp/parallel.h"
#include "wassdp/status_macros.h"
#include "wassdp/tree_estimator.h"
#include "wassdp/wasserstein.h"

namespace wassdp {
namespace {

// Stream ids reserved for the harness, far from the trial indices.
constexpr uint64_t kEmbeddingStream = 0xe3bedd1e9ull << 20;
constexpr uint64_t kRateStream = 0x4a7e0000ull << 20;

struct Segment {
  double lo;
  double hi;
  double scale;
};

// Q(x_j) = P(x_j) times the mean of h over atom j's mass slice.
absl::StatusOr<DiscreteDistribution> ApplyMultiplier(
    const DiscreteDistribution& p, const std::vector<Segment>& h) {
  const std::vector<double> cdf = p.Cdf();
  std::vector<double> q(p.size(), 0.0);
  double left = 0;
  for (int64_t j = 0; j < p.size(); ++j) {
    const double right = cdf[j];
    if (p.weight(j) > 0 && right > left) {
      double integral = 0;
      for (const Segment& s : h) {
        const double overlap = std::min(s.hi, right) - std::max(s.lo, left);
        if (overlap > 0) integral += s.scale * overlap;
      }
      q[j] = p.weight(j) * (integral / (right - left));
    }
    left = right;
  }
  return DiscreteDistribution::Create(p.domain(), std::move(q));
}

absl::Status CheckOrdered(const DiscreteDistribution& p) {
  if (!p.is_ordered()) {
    return absl::InvalidArgumentError("construction needs an ordered grid.");
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<Neighbor> HardPrivacyNeighbor1d(const DiscreteDistribution& p,
                                               int64_t k) {
  RETURN_IF_ERROR(CheckOrdered(p));
  if (k < 2) return absl::InvalidArgumentError("k should be at least 2.");
  const double tail = 1.0 / static_cast<double>(k);
  ASSIGN_OR_RETURN(int64_t q_low, QuantileIndex(p, tail));
  ASSIGN_OR_RETURN(int64_t q_high, QuantileIndex(p, 1 - tail));
  if (q_low == q_high) return Neighbor{p, true};
  ASSIGN_OR_RETURN(DiscreteDistribution q,
                   ApplyMultiplier(p, {{0, tail, 0.5},
                                       {tail, 1 - tail, 1.0},
                                       {1 - tail, 1, 1.5}}));
  return Neighbor{std::move(q), false};
}

absl::StatusOr<Neighbor> HardEmpiricalNeighbor1d(const DiscreteDistribution& p,
                                                 int64_t n) {
  RETURN_IF_ERROR(CheckOrdered(p));
  if (n < 4) return absl::InvalidArgumentError("n should be at least 4.");
  const double dn = static_cast<double>(n);
  // floor(log2 n), exact for every int64.
  const int log_n = 63 - __builtin_clzll(static_cast<uint64_t>(n));
  // Slices 2..last_sqrt get 1 +- sqrt(2^i / n) <= 3/2; all deeper slices
  // merge into one pair of 3/2 and 1/2 bands.
  const int last_sqrt = log_n - 2;
  const int first_flat = std::max(2, last_sqrt + 1);
  const double flat_edge = std::ldexp(1.0, 1 - first_flat);
  std::vector<Segment> h = {{0, flat_edge, 1.5}};
  for (int i = last_sqrt; i >= 2; --i) {
    const double shift = std::sqrt(std::ldexp(1.0, i) / dn);
    h.push_back({std::ldexp(1.0, -i), std::ldexp(1.0, 1 - i), 1 + shift});
  }
  // The middle (1/2, 1/2] slices of i = 1 are empty; mirror the rest.
  const size_t lower = h.size();
  for (size_t s = lower; s-- > 0;) {
    h.push_back({1 - h[s].hi, 1 - h[s].lo, 2 - h[s].scale});
  }
  const bool degenerate = p.Support().size() == 1;
  ASSIGN_OR_RETURN(DiscreteDistribution q, ApplyMultiplier(p, h));
  return Neighbor{std::move(q), degenerate};
}

std::map<int, std::vector<int64_t>> ScalePartition(
    const DiscreteDistribution& p) {
  std::map<int, std::vector<int64_t>> scales;
  for (int64_t x = 0; x < p.size(); ++x) {
    const double w = p.weight(x);
    if (!(w > 0)) continue;
    // w = m 2^e with m in [1/2, 1).
    int e = 0;
    const double m = std::frexp(w, &e);
    scales[m == 0.5 ? 1 - e : -e].push_back(x);
  }
  return scales;
}

absl::StatusOr<AssouadNet> AssouadNetDiscrete(const DiscreteDistribution& p,
                                              double perturbation,
                                              uint64_t pairing_seed,
                                              int max_corners) {
  if (!(perturbation > 0) || !std::isfinite(perturbation)) {
    return absl::InvalidArgumentError("perturbation should be positive.");
  }
  if (max_corners < 2) {
    return absl::InvalidArgumentError("need room for at least two corners.");
  }
  std::vector<int64_t> active;
  for (int64_t x = 0; x < p.size(); ++x) {
    if (p.weight(x) >= 2 * perturbation) active.push_back(x);
  }
  AssouadNet net;
  if (active.size() < 2) {
    net.degenerate = true;
    return net;
  }
  Rng pairing(pairing_seed);
  pairing.Shuffle(active);
  for (size_t i = 0; i + 1 < active.size(); i += 2) {
    net.pairs.push_back({active[i], active[i + 1]});
  }
  const size_t k = net.pairs.size();
  if (k < 31 && (int64_t{1} << k) <= max_corners) {
    for (int64_t code = 0; code < (int64_t{1} << k); ++code) {
      std::vector<int> corner(k);
      for (size_t j = 0; j < k; ++j) corner[j] = (code >> j) & 1 ? -1 : 1;
      net.corners.push_back(std::move(corner));
    }
  } else {
    net.corners.push_back(std::vector<int>(k, 1));
    net.corners.push_back(std::vector<int>(k, -1));
    Rng signs = pairing.Split(1);
    while (static_cast<int>(net.corners.size()) < max_corners) {
      std::vector<int> corner(k);
      for (int& s : corner) s = signs.UniformInt(2) == 0 ? 1 : -1;
      net.corners.push_back(std::move(corner));
    }
  }
  for (const std::vector<int>& corner : net.corners) {
    std::vector<double> w = p.weights();
    for (size_t j = 0; j < k; ++j) {
      w[net.pairs[j].first] += corner[j] * perturbation;
      w[net.pairs[j].second] -= corner[j] * perturbation;
    }
    ASSIGN_OR_RETURN(DiscreteDistribution member,
                     DiscreteDistribution::Create(p.domain(), std::move(w)));
    net.members.push_back(std::move(member));
  }
  return net;
}

absl::StatusOr<EstimatorKind> ParseEstimatorKind(const std::string& name) {
  if (name == "1d") return EstimatorKind::kOneDim;
  if (name == "tree") return EstimatorKind::kTree;
  if (name == "psmm") return EstimatorKind::kPsmm;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown estimator '", name, "'; use 1d, tree or psmm."));
}

std::string EstimatorName(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kOneDim:
      return "1d";
    case EstimatorKind::kTree:
      return "tree";
    case EstimatorKind::kPsmm:
      return "psmm";
  }
  return "unknown";
}

absl::StatusOr<RegretReportResult> RegretReport(
    const DiscreteDistribution& p, EstimatorKind estimator, int64_t n,
    double epsilon, int64_t trials, Rng& rng, const RegretOptions& options,
    const FiniteMetric* metric) {
  RETURN_IF_ERROR(ValidateEpsilon(epsilon));
  if (n < 2) return absl::InvalidArgumentError("n should be at least 2.");
  if (trials < 1) {
    return absl::InvalidArgumentError("trials should be at least 1.");
  }
  const GridDomain* grid = p.grid();
  if (estimator != EstimatorKind::kTree && grid == nullptr) {
    return absl::InvalidArgumentError(
        absl::StrCat(EstimatorName(estimator), " needs a grid distribution."));
  }

  RegretReportResult result;
  // Tree estimator: fix one embedding of the ground metric for all trials.
  std::optional<FiniteMetric> grid_metric;
  std::optional<Hst> hst;
  std::optional<DiscreteDistribution> p_tree;
  if (estimator == EstimatorKind::kTree) {
    if (grid != nullptr) {
      ASSIGN_OR_RETURN(grid_metric, FiniteMetric::FromGrid(*grid));
      metric = &*grid_metric;
    } else if (metric == nullptr || Domain(metric->domain()) != p.domain()) {
      return absl::InvalidArgumentError(
          "tree estimator needs the metric the distribution lives on.");
    }
    Rng embedding_rng = rng.Split(kEmbeddingStream);
    ASSIGN_OR_RETURN(hst, BuildFrtEmbedding(*metric, embedding_rng));
    ASSIGN_OR_RETURN(p_tree,
                     DiscreteDistribution::Create(metric->domain(), p.weights()));
    result.tree_depth = hst->depth();
    ASSIGN_OR_RETURN(TreeRateReport rate,
                     TargetRateTree(*p_tree, *hst, n, epsilon, options.delta));
    result.target_rate = rate.sum;
  } else {
    Rng rate_rng = rng.Split(kRateStream);
    ASSIGN_OR_RETURN(Rate1dReport rate,
                     TargetRate1d(p, n, epsilon, options.rate_constant,
                                  options.rate_trials, rate_rng, options.jobs));
    result.target_rate = rate.total();
  }

  result.errors.assign(trials, 0.0);
  std::vector<absl::Status> statuses(trials);
  auto run_trial = [&](int64_t t) -> absl::StatusOr<double> {
    Rng stream = rng.Split(static_cast<uint64_t>(t));
    const Dataset sample = SampleDataset(p, n, stream);
    switch (estimator) {
      case EstimatorKind::kOneDim: {
        Estimate1dOptions o;
        o.beta = options.beta;
        o.c2 = options.c2;
        o.c3 = options.c3;
        ASSIGN_OR_RETURN(Estimate1dResult est,
                         Estimate1d(sample, *grid, epsilon, stream, o,
                                    nullptr));
        return W1Cdf(p, est.distribution);
      }
      case EstimatorKind::kPsmm: {
        ASSIGN_OR_RETURN(DiscreteDistribution est,
                         PsmmBaseline(sample, *grid, options.psmm_buckets));
        return W1Cdf(p, est);
      }
      case EstimatorKind::kTree: {
        const Dataset on_tree{metric->domain(), sample.samples};
        TreeEstimatorOptions o;
        o.beta = options.beta;
        o.delta = options.delta;
        ASSIGN_OR_RETURN(TreeEstimate est,
                         PrivDensityEstTree(on_tree, *hst, epsilon, stream, o));
        if (grid != nullptr) {
          ASSIGN_OR_RETURN(
              DiscreteDistribution back,
              DiscreteDistribution::Create(*grid, est.distribution.weights()));
          return W1Cdf(p, back);
        }
        return W1Exact(p, est.distribution, *metric);
      }
    }
    return absl::InternalError("unknown estimator.");
  };
  ParallelFor(trials, options.jobs, [&](int64_t t) {
    absl::StatusOr<double> error = run_trial(t);
    if (error.ok()) {
      result.errors[t] = *error;
    } else {
      statuses[t] = error.status();
    }
  });
  for (const absl::Status& s : statuses) RETURN_IF_ERROR(s);
  result.measured_error_median = MedianOf(result.errors);
  if (result.measured_error_median == 0) {
    result.ratio = 0;
  } else if (result.target_rate == 0) {
    result.ratio = std::numeric_limits<double>::infinity();
  } else {
    result.ratio = result.measured_error_median / result.target_rate;
  }
  return result;
}

}  // namespace wassdp
