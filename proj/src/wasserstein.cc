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

#include "wassdp/wasserstein.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace wassdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Masses below this are treated as exhausted by the transport solver.
constexpr double kMassEpsilon = 1e-14;

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

absl::StatusOr<double> W1Cdf(const DiscreteDistribution& p,
                             const DiscreteDistribution& q) {
  if (absl::Status s = CheckSameDomain(p, q); !s.ok()) return s;
  const GridDomain* grid = p.grid();
  if (grid == nullptr) {
    return absl::InvalidArgumentError("W1Cdf needs an ordered grid domain.");
  }
  const std::vector<double> fp = p.Cdf();
  const std::vector<double> fq = q.Cdf();
  double total = 0;
  for (int64_t i = 0; i + 1 < p.size(); ++i) total += std::abs(fp[i] - fq[i]);
  return total * grid->gamma();
}

absl::StatusOr<double> W1Tree(const NodeFunction& gp, const NodeFunction& gq,
                              const Hst& hst) {
  return WeightedL1(gp, gq, hst);
}

absl::StatusOr<double> SolveTransport(
    const std::vector<double>& p, const std::vector<double>& q,
    const std::function<double(int64_t, int64_t)>& cost) {
  double p_total = 0;
  double q_total = 0;
  for (double v : p) {
    if (!(v >= 0) || !std::isfinite(v)) {
      return absl::InvalidArgumentError("supplies must be finite and >= 0.");
    }
    p_total += v;
  }
  for (double v : q) {
    if (!(v >= 0) || !std::isfinite(v)) {
      return absl::InvalidArgumentError("demands must be finite and >= 0.");
    }
    q_total += v;
  }
  if (std::abs(p_total - q_total) > 1e-9 * std::max(1.0, p_total)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "supply total ", p_total, " differs from demand total ", q_total, "."));
  }
  std::vector<int64_t> src;
  std::vector<int64_t> dst;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0) src.push_back(static_cast<int64_t>(i));
  }
  for (size_t j = 0; j < q.size(); ++j) {
    if (q[j] > 0) dst.push_back(static_cast<int64_t>(j));
  }
  const int64_t s = static_cast<int64_t>(src.size());
  const int64_t t = static_cast<int64_t>(dst.size());
  if (s * t > kMaxExactPairs) {
    return absl::ResourceExhaustedError(
        absl::StrCat("exact transport limited to ", kMaxExactPairs,
                     " support pairs, got ", s * t, "."));
  }
  if (s == 0 || t == 0) return 0.0;

  std::vector<double> c(s * t);
  for (int64_t i = 0; i < s; ++i) {
    for (int64_t j = 0; j < t; ++j) c[i * t + j] = cost(src[i], dst[j]);
  }
  std::vector<double> supply(s);
  std::vector<double> demand(t);
  for (int64_t i = 0; i < s; ++i) supply[i] = p[src[i]];
  for (int64_t j = 0; j < t; ++j) demand[j] = q[dst[j]];
  std::vector<double> flow(s * t, 0.0);

  // Nodes 0..s-1 are sources, s..s+t-1 sinks. Forward arcs source -> sink
  // are uncapacitated; residual arcs sink -> source exist where flow > 0.
  const int64_t v_count = s + t;
  std::vector<double> potential(v_count, 0.0);
  std::vector<double> dist(v_count);
  std::vector<int64_t> prev(v_count);
  std::vector<char> done(v_count);
  for (;;) {
    bool any_supply = false;
    for (int64_t i = 0; i < s; ++i) any_supply |= supply[i] > kMassEpsilon;
    bool any_demand = false;
    for (int64_t j = 0; j < t; ++j) any_demand |= demand[j] > kMassEpsilon;
    if (!any_supply || !any_demand) break;

    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(prev.begin(), prev.end(), -1);
    std::fill(done.begin(), done.end(), 0);
    for (int64_t i = 0; i < s; ++i) {
      if (supply[i] > kMassEpsilon) dist[i] = 0;
    }
    for (int64_t round = 0; round < v_count; ++round) {
      int64_t u = -1;
      for (int64_t v = 0; v < v_count; ++v) {
        if (!done[v] && dist[v] < kInf && (u < 0 || dist[v] < dist[u])) u = v;
      }
      if (u < 0) break;
      done[u] = 1;
      if (u < s) {
        for (int64_t j = 0; j < t; ++j) {
          const int64_t v = s + j;
          const double rc =
              std::max(0.0, c[u * t + j] + potential[u] - potential[v]);
          if (dist[u] + rc < dist[v]) {
            dist[v] = dist[u] + rc;
            prev[v] = u;
          }
        }
      } else {
        const int64_t j = u - s;
        for (int64_t i = 0; i < s; ++i) {
          if (flow[i * t + j] <= kMassEpsilon) continue;
          const double rc =
              std::max(0.0, -c[i * t + j] + potential[u] - potential[i]);
          if (dist[u] + rc < dist[i]) {
            dist[i] = dist[u] + rc;
            prev[i] = u;
          }
        }
      }
    }
    int64_t target = -1;
    for (int64_t j = 0; j < t; ++j) {
      if (demand[j] > kMassEpsilon && dist[s + j] < kInf &&
          (target < 0 || dist[s + j] < dist[target])) {
        target = s + j;
      }
    }
    if (target < 0) {
      return absl::InternalError("transport solver found no augmenting path.");
    }
    for (int64_t v = 0; v < v_count; ++v) {
      potential[v] += std::min(dist[v], dist[target]);
    }
    double amount = demand[target - s];
    int64_t v = target;
    while (prev[v] >= 0) {
      const int64_t u = prev[v];
      if (u >= s) amount = std::min(amount, flow[v * t + (u - s)]);
      v = u;
    }
    amount = std::min(amount, supply[v]);
    const int64_t origin = v;
    v = target;
    while (prev[v] >= 0) {
      const int64_t u = prev[v];
      if (u < s) {
        flow[u * t + (v - s)] += amount;
      } else {
        flow[v * t + (u - s)] -= amount;
      }
      v = u;
    }
    supply[origin] -= amount;
    demand[target - s] -= amount;
  }
  double total = 0;
  for (int64_t k = 0; k < s * t; ++k) {
    if (flow[k] > 0) total += flow[k] * c[k];
  }
  return total;
}

absl::StatusOr<double> W1Exact(const DiscreteDistribution& p,
                               const DiscreteDistribution& q,
                               const FiniteMetric& metric) {
  if (absl::Status s = CheckSameDomain(p, q); !s.ok()) return s;
  if (p.domain() != Domain(metric.domain())) {
    return absl::InvalidArgumentError(
        absl::StrCat("distributions live on ", DescribeDomain(p.domain()),
                     ", not on metric '", metric.id(), "'."));
  }
  return SolveTransport(p.weights(), q.weights(),
                        [&metric](int64_t i, int64_t j) {
                          return metric.distance(i, j);
                        });
}

absl::StatusOr<double> W1ExactGrid(const DiscreteDistribution& p,
                                   const DiscreteDistribution& q) {
  if (absl::Status s = CheckSameDomain(p, q); !s.ok()) return s;
  const GridDomain* grid = p.grid();
  if (grid == nullptr) {
    return absl::InvalidArgumentError("W1ExactGrid needs a grid domain.");
  }
  const double gamma = grid->gamma();
  return SolveTransport(p.weights(), q.weights(),
                        [gamma](int64_t i, int64_t j) {
                          return std::abs(static_cast<double>(i - j)) * gamma;
                        });
}

}  // namespace wassdp
