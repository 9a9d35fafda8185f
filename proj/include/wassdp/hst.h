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

#ifndef WASSDP_HST_H_
#define WASSDP_HST_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "wassdp/domain.h"

namespace wassdp {

// A hierarchically separated tree. Levels run from the root (0) to the
// leaves (depth()); the edges entering level l all weigh r_l, with
// r_{l+1} = r_l / 2. Every leaf sits at the bottom level and stands for one
// point of an underlying point set.
//
// Nodes are stored in breadth-first order, so each level and each sibling
// group occupies a contiguous id range.
class Hst {
 public:
  struct Node {
    int32_t parent = -1;
    int32_t level = 0;
    int32_t first_child = 0;
    int32_t num_children = 0;
    // Point index for leaves, -1 for internal nodes.
    int64_t point = -1;
  };

  // `parents[0]` must be -1 and the rest non-decreasing with parents[i] < i,
  // which is exactly breadth-first order. `node_points` holds a point index
  // for every leaf and -1 elsewhere; each point has at most one leaf.
  static absl::StatusOr<Hst> Create(double top_weight,
                                    const std::vector<int32_t>& parents,
                                    const std::vector<int64_t>& node_points,
                                    MetricDomain point_domain);

  int depth() const { return depth_; }
  // r_1, the weight of the edges below the root.
  double top_weight() const { return top_weight_; }
  // r_level for level >= 1; 0 for the root.
  double edge_weight(int level) const;
  // Weight of the edge from `node` to its parent; 0 for the root.
  double node_weight(int32_t node) const {
    return edge_weight(nodes_[node].level);
  }

  int32_t num_nodes() const { return static_cast<int32_t>(nodes_.size()); }
  const Node& node(int32_t id) const { return nodes_[id]; }
  bool is_leaf(int32_t id) const { return nodes_[id].num_children == 0; }
  // Node ids of level l are [level_begin(l), level_end(l)).
  int32_t level_begin(int level) const { return level_offsets_[level]; }
  int32_t level_end(int level) const { return level_offsets_[level + 1]; }

  const MetricDomain& point_domain() const { return point_domain_; }
  int64_t num_points() const { return point_domain_.size; }
  // Leaf of a point, or -1 when the point has no leaf.
  int32_t leaf_of_point(int64_t point) const { return point_leaf_[point]; }

  // Sum of edge weights on the path between two nodes.
  double TreeDistance(int32_t u, int32_t v) const;
  // Tree distance between the leaves of two mapped points.
  double PointDistance(int64_t p, int64_t q) const;

  // Hash of structure, weights and leaf map. Node functions carry it so that
  // functions over different trees are never mixed.
  uint64_t fingerprint() const { return fingerprint_; }

  std::vector<int32_t> Parents() const;
  std::vector<int64_t> NodePoints() const;

 private:
  Hst() = default;

  int depth_ = 0;
  double top_weight_ = 0;
  std::vector<Node> nodes_;
  std::vector<int32_t> level_offsets_;
  std::vector<int32_t> point_leaf_;
  MetricDomain point_domain_;
  uint64_t fingerprint_ = 0;
};

}  // namespace wassdp

#endif  // WASSDP_HST_H_
