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

#include "wassdp/node_function.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace wassdp {

NodeFunction::NodeFunction(const Hst& hst, std::vector<double> values)
    : values_(std::move(values)), fingerprint_(hst.fingerprint()) {
  values_.resize(hst.num_nodes(), 0.0);
}

NodeFunction::NodeFunction(const Hst& hst)
    : values_(hst.num_nodes(), 0.0), fingerprint_(hst.fingerprint()) {}

absl::StatusOr<NodeFunction> InducedNodeFunction(const DiscreteDistribution& p,
                                                 const Hst& hst) {
  const auto* domain = std::get_if<MetricDomain>(&p.domain());
  if (domain == nullptr || *domain != hst.point_domain()) {
    return absl::InvalidArgumentError(
        absl::StrCat("distribution on ", DescribeDomain(p.domain()),
                     " does not match the tree's points ",
                     DescribeDomain(hst.point_domain()), "."));
  }
  NodeFunction g(hst);
  for (int64_t x = 0; x < p.size(); ++x) {
    if (p.weight(x) == 0) continue;
    const int32_t leaf = hst.leaf_of_point(x);
    if (leaf < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("point ", x, " carries mass but has no leaf."));
    }
    g[leaf] = p.weight(x);
  }
  // Children follow their parents in breadth-first order.
  for (int32_t v = hst.num_nodes() - 1; v > 0; --v) {
    g[hst.node(v).parent] += g.value(v);
  }
  // The root is exactly 1; rounding in the sum above is below 1e-15.
  g[0] = 1.0;
  return g;
}

std::vector<int32_t> ActiveNodes(const NodeFunction& g, double alpha) {
  std::vector<int32_t> active;
  for (int32_t v = 0; v < g.size(); ++v) {
    if (g.value(v) > alpha) active.push_back(v);
  }
  return active;
}

absl::StatusOr<double> WeightedL1(const NodeFunction& f, const NodeFunction& g,
                                  const Hst& hst) {
  if (f.tree_fingerprint() != hst.fingerprint() ||
      g.tree_fingerprint() != hst.fingerprint()) {
    return absl::InvalidArgumentError(
        "node functions belong to a different tree.");
  }
  double total = 0;
  for (int32_t v = 1; v < hst.num_nodes(); ++v) {
    total += hst.node_weight(v) * std::abs(f.value(v) - g.value(v));
  }
  return total;
}

std::vector<double> LevelValues(const NodeFunction& g, const Hst& hst,
                                int level) {
  return std::vector<double>(g.values().begin() + hst.level_begin(level),
                             g.values().begin() + hst.level_end(level));
}

}  // namespace wassdp
