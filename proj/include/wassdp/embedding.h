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

#ifndef WASSDP_EMBEDDING_H_
#define WASSDP_EMBEDDING_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "wassdp/finite_metric.h"
#include "wassdp/hst.h"
#include "wassdp/rng.h"

namespace wassdp {

// Randomized tree embedding in the style of Fakcharoenphol, Rao and Talwar.
// A random permutation and a radius scale beta in [1/2, 1) define nested
// clusterings at radii beta diam 2^{1-l}, l = 1..D, with
// D = ceil(log2(diam / min distance)) + 1 so the last level is singletons.
// Edge weights are then scaled so that the tree metric dominates the input
// metric with equality on the tightest pair. Leaf of point i carries i.
absl::StatusOr<Hst> BuildFrtEmbedding(const FiniteMetric& metric, Rng& rng);

// Dyadic embedding of [0, 1]^d into a 2^d-ary tree whose leaf cells have
// side at most alpha.
class GridEmbedding {
 public:
  // With `random_shift`, the root is the cube [-s, 2 - s)^d for a uniform
  // shift s in [0, 1)^d and D = ceil(log2(1 / alpha)) + 1. Without it, the
  // root is [0, 1]^d and D = ceil(log2(1 / alpha)). Only cells meeting
  // [0, 1]^d are kept. Edge weights sqrt(d) side / 2 make the tree dominate
  // Euclidean distance between points of different leaves.
  static absl::StatusOr<GridEmbedding> Create(int dimension, double alpha,
                                              Rng& rng,
                                              bool random_shift = true);

  const Hst& hst() const { return hst_; }
  int dimension() const { return dimension_; }
  double alpha() const { return alpha_; }
  const std::vector<double>& shift() const { return shift_; }

  // Point index (leaf ordinal) of the cell holding x; x must lie in
  // [0, 1]^d.
  absl::StatusOr<int64_t> PointOf(const std::vector<double>& x) const;
  // Center of the part of a leaf cell inside [0, 1]^d.
  std::vector<double> representative(int64_t point) const {
    return std::vector<double>(
        representatives_.begin() + point * dimension_,
        representatives_.begin() + (point + 1) * dimension_);
  }

 private:
  GridEmbedding(Hst hst, int dimension, double alpha,
                std::vector<double> shift, double root_side,
                std::vector<uint32_t> codes,
                std::vector<double> representatives)
      : hst_(std::move(hst)),
        dimension_(dimension),
        alpha_(alpha),
        shift_(std::move(shift)),
        root_side_(root_side),
        codes_(std::move(codes)),
        representatives_(std::move(representatives)) {}

  Hst hst_;
  int dimension_;
  double alpha_;
  std::vector<double> shift_;
  double root_side_;
  // Orthant code of each node within its parent, ascending among siblings.
  std::vector<uint32_t> codes_;
  // `dimension_` coordinates per leaf.
  std::vector<double> representatives_;
};

}  // namespace wassdp

#endif  // WASSDP_EMBEDDING_H_
