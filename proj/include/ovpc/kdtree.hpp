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

#pragma once

#include <span>
#include <vector>

#include "ovpc/geom.hpp"

namespace ovpc {

/// Static 3-d tree over a borrowed point array. The points must outlive the
/// tree and stay unmodified.
class KdTree {
 public:
  struct Neighbor {
    Index index;
    double squared_distance;
  };

  KdTree() = default;
  explicit KdTree(std::span<const Point3> points, std::size_t leaf_size = 12);

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

  /// Closest point; equal distances resolve to the lowest index.
  /// Precondition: !empty().
  Neighbor nearest(const Point3& query) const;

  /// All indices with |p - query| <= radius, ascending.
  std::vector<Index> radius_search(const Point3& query, double radius) const;

  /// All indices inside the closed axis-aligned box, ascending.
  std::vector<Index> box_search(const Point3& lo, const Point3& hi) const;

 private:
  struct Node {
    std::uint32_t begin;
    std::uint32_t end;
    std::int32_t left = -1;
    std::int32_t right = -1;
    int axis = -1;
    double split = 0.0;
    Eigen::AlignedBox3d bounds;
  };

  std::int32_t build(std::uint32_t begin, std::uint32_t end, std::size_t leaf_size);
  void nearest_impl(std::int32_t node, const Point3& q, Neighbor& best) const;

  std::span<const Point3> points_;
  std::vector<Index> order_;
  std::vector<Node> nodes_;
};

}  // namespace ovpc
