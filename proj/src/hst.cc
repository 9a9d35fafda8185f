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

#include "wassdp/hst.h"

#include <bit>
#include <cmath>
#include <cstring>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "wassdp/rng.h"

namespace wassdp {

absl::StatusOr<Hst> Hst::Create(double top_weight,
                                const std::vector<int32_t>& parents,
                                const std::vector<int64_t>& node_points,
                                MetricDomain point_domain) {
  const size_t num_nodes = parents.size();
  if (num_nodes == 0) return absl::InvalidArgumentError("tree has no nodes.");
  if (num_nodes > static_cast<size_t>(INT32_MAX)) {
    return absl::InvalidArgumentError("tree is too large.");
  }
  if (node_points.size() != num_nodes) {
    return absl::InvalidArgumentError(
        absl::StrCat("leaf map has ", node_points.size(), " entries for ",
                     num_nodes, " nodes."));
  }
  if (!std::isfinite(top_weight) || !(top_weight > 0)) {
    return absl::InvalidArgumentError("top edge weight should be positive.");
  }
  if (parents[0] != -1) {
    return absl::InvalidArgumentError("node 0 must be the root.");
  }
  Hst hst;
  hst.top_weight_ = top_weight;
  hst.point_domain_ = std::move(point_domain);
  hst.nodes_.resize(num_nodes);
  for (size_t i = 1; i < num_nodes; ++i) {
    const int32_t p = parents[i];
    if (p < 0 || static_cast<size_t>(p) >= i || p < parents[i - 1]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "parent of node ", i, " is ", p,
          "; nodes must be listed in breadth-first order."));
    }
    Node& node = hst.nodes_[i];
    node.parent = p;
    node.level = hst.nodes_[p].level + 1;
    if (node.level < hst.nodes_[i - 1].level) {
      return absl::InvalidArgumentError(
          absl::StrCat("node ", i, " breaks breadth-first level order."));
    }
    Node& parent = hst.nodes_[p];
    if (parent.num_children == 0) parent.first_child = static_cast<int32_t>(i);
    ++parent.num_children;
  }
  hst.depth_ = hst.nodes_.back().level;
  hst.level_offsets_.assign(hst.depth_ + 2, static_cast<int32_t>(num_nodes));
  for (size_t i = num_nodes; i > 0; --i) {
    hst.level_offsets_[hst.nodes_[i - 1].level] = static_cast<int32_t>(i - 1);
  }
  hst.point_leaf_.assign(hst.point_domain_.size, -1);
  for (size_t i = 0; i < num_nodes; ++i) {
    Node& node = hst.nodes_[i];
    const int64_t point = node_points[i];
    if (node.num_children > 0) {
      if (point != -1) {
        return absl::InvalidArgumentError(
            absl::StrCat("internal node ", i, " carries a point."));
      }
      continue;
    }
    if (node.level != hst.depth_) {
      return absl::InvalidArgumentError(absl::StrCat(
          "leaf ", i, " is at level ", node.level, ", not at depth ",
          hst.depth_, "."));
    }
    if (point < 0 || point >= hst.point_domain_.size) {
      return absl::InvalidArgumentError(
          absl::StrCat("leaf ", i, " maps to invalid point ", point, "."));
    }
    if (hst.point_leaf_[point] != -1) {
      return absl::InvalidArgumentError(
          absl::StrCat("point ", point, " has two leaves."));
    }
    hst.point_leaf_[point] = static_cast<int32_t>(i);
    node.point = point;
  }

  uint64_t h = SplitMix64(std::bit_cast<uint64_t>(top_weight));
  h = SplitMix64(h ^ static_cast<uint64_t>(hst.point_domain_.size));
  for (char c : hst.point_domain_.id) h = SplitMix64(h ^ static_cast<uint8_t>(c));
  for (size_t i = 0; i < num_nodes; ++i) {
    h = SplitMix64(h ^ static_cast<uint64_t>(parents[i] + 1));
    h = SplitMix64(h ^ static_cast<uint64_t>(node_points[i] + 1));
  }
  hst.fingerprint_ = h;
  return hst;
}

double Hst::edge_weight(int level) const {
  if (level <= 0) return 0;
  return std::ldexp(top_weight_, -(level - 1));
}

double Hst::TreeDistance(int32_t u, int32_t v) const {
  double total = 0;
  while (nodes_[u].level > nodes_[v].level) {
    total += node_weight(u);
    u = nodes_[u].parent;
  }
  while (nodes_[v].level > nodes_[u].level) {
    total += node_weight(v);
    v = nodes_[v].parent;
  }
  while (u != v) {
    total += node_weight(u) + node_weight(v);
    u = nodes_[u].parent;
    v = nodes_[v].parent;
  }
  return total;
}

double Hst::PointDistance(int64_t p, int64_t q) const {
  return TreeDistance(point_leaf_[p], point_leaf_[q]);
}

std::vector<int32_t> Hst::Parents() const {
  std::vector<int32_t> parents(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i) parents[i] = nodes_[i].parent;
  return parents;
}

std::vector<int64_t> Hst::NodePoints() const {
  std::vector<int64_t> points(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i) points[i] = nodes_[i].point;
  return points;
}

}  // namespace wassdp
