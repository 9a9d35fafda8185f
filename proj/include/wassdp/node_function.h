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

#ifndef WASSDP_NODE_FUNCTION_H_
#define WASSDP_NODE_FUNCTION_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "wassdp/distribution.h"
#include "wassdp/hst.h"

namespace wassdp {

// A real value per node of a specific tree.
class NodeFunction {
 public:
  NodeFunction(const Hst& hst, std::vector<double> values);
  // All zeros.
  explicit NodeFunction(const Hst& hst);

  const std::vector<double>& values() const { return values_; }
  double value(int32_t node) const { return values_[node]; }
  double& operator[](int32_t node) { return values_[node]; }
  int32_t size() const { return static_cast<int32_t>(values_.size()); }
  uint64_t tree_fingerprint() const { return fingerprint_; }

 private:
  std::vector<double> values_;
  uint64_t fingerprint_;
};

// Mass of each node's leaf subtree under P. P must live on the tree's point
// domain and put no mass on points without a leaf.
absl::StatusOr<NodeFunction> InducedNodeFunction(const DiscreteDistribution& p,
                                                 const Hst& hst);

// Nodes with value strictly greater than alpha, in id order.
std::vector<int32_t> ActiveNodes(const NodeFunction& g, double alpha);

// Weighted l1 distance sum over non-root nodes of r(node) |F - G|.
absl::StatusOr<double> WeightedL1(const NodeFunction& f, const NodeFunction& g,
                                  const Hst& hst);

// The values of the nodes at `level`, in id order.
std::vector<double> LevelValues(const NodeFunction& g, const Hst& hst,
                                int level);

}  // namespace wassdp

#endif  // WASSDP_NODE_FUNCTION_H_
