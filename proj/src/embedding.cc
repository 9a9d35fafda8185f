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

#include "wassdp/embedding.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "wassdp/status_macros.h"

namespace wassdp {
namespace {

// Cap on materialized grid-tree nodes.
constexpr int64_t kMaxGridNodes = int64_t{1} << 25;

}  // namespace

absl::StatusOr<Hst> BuildFrtEmbedding(const FiniteMetric& metric, Rng& rng) {
  const int64_t m = metric.size();
  if (m < 1) return absl::InvalidArgumentError("metric has no points.");
  if (m == 1) return Hst::Create(1.0, {-1}, {0}, metric.domain());

  const double diameter = metric.diameter();
  const int depth = static_cast<int>(
      std::ceil(std::log2(diameter / metric.min_positive_distance()))) + 1;
  if (depth > 50) {
    return absl::InvalidArgumentError(
        "metric aspect ratio exceeds 2^49; tree would be too deep.");
  }
  std::vector<int64_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(order);
  const double beta = 0.5 + 0.5 * rng.Uniform();

  // cluster[l][x] is the id of x's level-l node; ids are breadth-first.
  std::vector<std::vector<int32_t>> cluster(depth + 1,
                                            std::vector<int32_t>(m, 0));
  std::vector<int32_t> parents = {-1};
  std::vector<int64_t> node_points = {-1};
  // Members of each node of the previous level, in node order.
  std::vector<std::vector<int64_t>> members = {order};
  std::sort(members[0].begin(), members[0].end());
  int32_t level_start = 0;
  for (int l = 1; l <= depth; ++l) {
    const double radius = beta * diameter * std::ldexp(1.0, 1 - l);
    std::vector<std::vector<int64_t>> next;
    const int32_t next_start = static_cast<int32_t>(parents.size());
    for (size_t c = 0; c < members.size(); ++c) {
      const int32_t parent = level_start + static_cast<int32_t>(c);
      // Group by the first center, in permutation order, within the radius.
      std::vector<std::pair<int64_t, int64_t>> keyed;
      for (int64_t x : members[c]) {
        int64_t rank = 0;
        while (metric.distance(x, order[rank]) > radius) ++rank;
        keyed.push_back({rank, x});
      }
      std::sort(keyed.begin(), keyed.end());
      for (size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) {
          parents.push_back(parent);
          node_points.push_back(-1);
          next.emplace_back();
        }
        next.back().push_back(keyed[i].second);
        cluster[l][keyed[i].second] =
            static_cast<int32_t>(parents.size()) - 1;
      }
    }
    members = std::move(next);
    level_start = next_start;
  }
  for (size_t c = 0; c < members.size(); ++c) {
    if (members[c].size() != 1) {
      return absl::InternalError("bottom level of the tree is not singletons.");
    }
    node_points[level_start + c] = members[c][0];
  }

  // With r_1 = 1, leaves whose lowest common ancestor sits at level l are
  // 2 sum_{j > l} 2^{1-j} apart. Scale r_1 to the largest d / d_T so that
  // the tree dominates; rounding the quotient up keeps that exact.
  std::vector<double> unit_distance(depth + 1, 0.0);
  for (int l = depth - 1; l >= 0; --l) {
    unit_distance[l] = unit_distance[l + 1] + 2 * std::ldexp(1.0, -l);
  }
  double top = 0;
  for (int64_t u = 0; u < m; ++u) {
    for (int64_t v = u + 1; v < m; ++v) {
      int lca = 0;
      while (lca < depth && cluster[lca + 1][u] == cluster[lca + 1][v]) ++lca;
      top = std::max(top, metric.distance(u, v) / unit_distance[lca]);
    }
  }
  top = std::nextafter(top, std::numeric_limits<double>::infinity());
  return Hst::Create(top, parents, node_points, metric.domain());
}

absl::StatusOr<GridEmbedding> GridEmbedding::Create(int dimension,
                                                    double alpha, Rng& rng,
                                                    bool random_shift) {
  if (dimension < 1 || dimension > 16) {
    return absl::InvalidArgumentError("dimension should be in [1, 16].");
  }
  if (!(alpha > 0 && alpha < 1)) {
    return absl::InvalidArgumentError("alpha should be in (0, 1).");
  }
  const int base_depth = static_cast<int>(std::ceil(std::log2(1 / alpha)));
  const int depth = random_shift ? base_depth + 1 : base_depth;
  const double root_side = random_shift ? 2.0 : 1.0;
  std::vector<double> shift(dimension, 0.0);
  if (random_shift) {
    for (double& s : shift) s = rng.Uniform();
  }
  const int children = 1 << dimension;

  // Integer cell coordinates, `dimension` per node; a cell spans
  // [c side - shift, (c + 1) side - shift) in each coordinate.
  std::vector<int64_t> coords(dimension, 0);
  std::vector<int32_t> parents = {-1};
  std::vector<uint32_t> codes = {0};
  int64_t level_begin = 0;
  for (int l = 1; l <= depth; ++l) {
    const double side = std::ldexp(root_side, -l);
    const int64_t level_end = static_cast<int64_t>(parents.size());
    for (int64_t v = level_begin; v < level_end; ++v) {
      for (int code = 0; code < children; ++code) {
        std::vector<int64_t> c(dimension);
        bool inside = true;
        for (int i = 0; i < dimension && inside; ++i) {
          c[i] = 2 * coords[v * dimension + i] + ((code >> i) & 1);
          const double lo = -shift[i] + static_cast<double>(c[i]) * side;
          inside = lo < 1 && lo + side > 0;
        }
        if (!inside) continue;
        parents.push_back(static_cast<int32_t>(v));
        codes.push_back(static_cast<uint32_t>(code));
        coords.insert(coords.end(), c.begin(), c.end());
      }
      if (static_cast<int64_t>(parents.size()) > kMaxGridNodes) {
        return absl::ResourceExhaustedError(absl::StrCat(
            "grid tree needs more than ", kMaxGridNodes, " nodes."));
      }
    }
    level_begin = level_end;
  }

  const int64_t num_nodes = static_cast<int64_t>(parents.size());
  const int64_t num_leaves = depth == 0 ? 1 : num_nodes - level_begin;
  std::vector<int64_t> node_points(num_nodes, -1);
  std::vector<double> representatives(num_leaves * dimension);
  const double leaf_side = std::ldexp(root_side, -depth);
  for (int64_t v = level_begin, p = 0; v < num_nodes; ++v, ++p) {
    node_points[v] = p;
    for (int i = 0; i < dimension; ++i) {
      const double lo =
          -shift[i] + static_cast<double>(coords[v * dimension + i]) * leaf_side;
      representatives[p * dimension + i] =
          0.5 * (std::max(lo, 0.0) + std::min(lo + leaf_side, 1.0));
    }
  }
  const double top_weight = std::sqrt(static_cast<double>(dimension)) *
                            root_side / 2;
  ASSIGN_OR_RETURN(
      Hst hst,
      Hst::Create(top_weight, parents, node_points,
                  MetricDomain{absl::StrCat("grid-embedding:", dimension, ":",
                                            alpha),
                               num_leaves}));
  return GridEmbedding(std::move(hst), dimension, alpha, std::move(shift),
                       root_side, std::move(codes),
                       std::move(representatives));
}

absl::StatusOr<int64_t> GridEmbedding::PointOf(
    const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dimension_) {
    return absl::InvalidArgumentError(absl::StrCat(
        "point has ", x.size(), " coordinates, expected ", dimension_, "."));
  }
  for (double xi : x) {
    if (!(xi >= 0 && xi <= 1)) {
      return absl::InvalidArgumentError(
          absl::StrCat("coordinate ", xi, " is outside [0, 1]."));
    }
  }
  const int depth = hst_.depth();
  int32_t node = 0;
  for (int l = 1; l <= depth; ++l) {
    const double side = std::ldexp(root_side_, -l);
    uint32_t code = 0;
    for (int i = 0; i < dimension_; ++i) {
      const double offset = x[i] + shift_[i];
      int64_t c = static_cast<int64_t>(std::floor(offset / side));
      // The point 1 belongs to the cell ending at 1 when a cell starts there.
      if (-shift_[i] + static_cast<double>(c) * side >= 1) --c;
      code |= static_cast<uint32_t>(c & 1) << i;
    }
    const Hst::Node& parent = hst_.node(node);
    const auto begin = codes_.begin() + parent.first_child;
    const auto end = begin + parent.num_children;
    const auto it = std::lower_bound(begin, end, code);
    if (it == end || *it != code) {
      return absl::InternalError("point fell outside the materialized cells.");
    }
    node = static_cast<int32_t>(it - codes_.begin());
  }
  return hst_.node(node).point;
}

}  // namespace wassdp
