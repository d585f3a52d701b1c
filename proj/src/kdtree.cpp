// Copyright 2026 The OVPC Mesh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ovpc/kdtree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ovpc {

KdTree::KdTree(std::span<const Point3> points, std::size_t leaf_size) : points_(points) {
  order_.resize(points.size());
  std::iota(order_.begin(), order_.end(), Index{0});
  if (!points.empty()) {
    nodes_.reserve(2 * points.size() / std::max<std::size_t>(leaf_size, 1) + 1);
    build(0, static_cast<std::uint32_t>(points.size()), std::max<std::size_t>(leaf_size, 1));
  }
}

std::int32_t KdTree::build(std::uint32_t begin, std::uint32_t end, std::size_t leaf_size) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(Node{begin, end, -1, -1, -1, 0.0, Eigen::AlignedBox3d()});
  Eigen::AlignedBox3d box;
  for (std::uint32_t i = begin; i < end; ++i) box.extend(points_[order_[i]]);
  nodes_[id].bounds = box;
  if (end - begin <= leaf_size) return id;

  int axis = 0;
  box.sizes().maxCoeff(&axis);
  if (!(box.sizes()[axis] > 0.0)) return id;  // all coincident

  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](Index a, Index b) { return points_[a][axis] < points_[b][axis]; });
  nodes_[id].axis = axis;
  nodes_[id].split = points_[order_[mid]][axis];
  const std::int32_t left = build(begin, mid, leaf_size);
  const std::int32_t right = build(mid, end, leaf_size);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

KdTree::Neighbor KdTree::nearest(const Point3& query) const {
  Neighbor best{std::numeric_limits<Index>::max(), std::numeric_limits<double>::infinity()};
  if (!nodes_.empty()) nearest_impl(0, query, best);
  return best;
}

void KdTree::nearest_impl(std::int32_t id, const Point3& q, Neighbor& best) const {
  const Node& node = nodes_[id];
  // Equal bound still descends: a tie may carry a lower index.
  if (node.bounds.squaredExteriorDistance(q) > best.squared_distance) return;
  if (node.axis < 0) {
    for (std::uint32_t i = node.begin; i < node.end; ++i) {
      const Index idx = order_[i];
      const double d2 = (points_[idx] - q).squaredNorm();
      if (d2 < best.squared_distance || (d2 == best.squared_distance && idx < best.index)) {
        best = {idx, d2};
      }
    }
    return;
  }
  const bool go_left_first = q[node.axis] < node.split;
  nearest_impl(go_left_first ? node.left : node.right, q, best);
  nearest_impl(go_left_first ? node.right : node.left, q, best);
}

std::vector<Index> KdTree::radius_search(const Point3& query, double radius) const {
  std::vector<Index> out;
  if (nodes_.empty() || !(radius >= 0.0)) return out;
  const double r2 = radius * radius;
  std::vector<std::int32_t> stack{0};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (node.bounds.squaredExteriorDistance(query) > r2) continue;
    if (node.axis < 0) {
      for (std::uint32_t i = node.begin; i < node.end; ++i) {
        const Index idx = order_[i];
        if ((points_[idx] - query).squaredNorm() <= r2) out.push_back(idx);
      }
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> KdTree::box_search(const Point3& lo, const Point3& hi) const {
  std::vector<Index> out;
  if (nodes_.empty()) return out;
  const Eigen::AlignedBox3d query(lo, hi);
  std::vector<std::int32_t> stack{0};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    stack.pop_back();
    if (!node.bounds.intersects(query)) continue;
    if (node.axis < 0 || query.contains(node.bounds)) {
      for (std::uint32_t i = node.begin; i < node.end; ++i) {
        const Index idx = order_[i];
        if (query.contains(points_[idx])) out.push_back(idx);
      }
    } else {
      stack.push_back(node.left);
      stack.push_back(node.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ovpc
