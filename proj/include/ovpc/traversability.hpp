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

#include <numbers>
#include <span>
#include <vector>

#include "ovpc/geom.hpp"
#include "ovpc/kdtree.hpp"

namespace ovpc {

struct TraversabilityConfig {
  double alpha_max = 30.0 * std::numbers::pi / 180.0;  // radians
  double dh_max = 0.25;                                // meters

  void validate() const;
};

struct FaceLabel {
  bool traversable = false;
  double surface_angle = 0.0;  // radians in [0, pi], measured against +z
};

struct VertexAttributes {
  std::vector<Vec3> normals;
  std::vector<bool> traversable;
};

/// A face is traversable when its viewpoint-facing normal is within
/// alpha_max of +z and its vertex heights span at most dh_max. Downward
/// facing normals therefore never pass. Throws StructuralError on a
/// non-unit face normal.
std::vector<FaceLabel> face_labels(const TriangleMesh& mesh, const TraversabilityConfig& cfg);

/// Per-vertex mean of the incident face normals and the AND of the incident
/// face labels. Throws StructuralError on size mismatch or isolated vertices.
VertexAttributes vertex_attributes(const TriangleMesh& mesh, std::span<const FaceLabel> labels);

/// Classified vertex cloud used for planning queries. Immutable once built.
class NavMap {
 public:
  NavMap() = default;
  NavMap(std::vector<Point3> points, std::vector<Vec3> normals, std::vector<bool> traversable,
         Point3 viewpoint, std::vector<Index> source_index = {});

  NavMap(const NavMap& other);
  NavMap& operator=(const NavMap& other);
  NavMap(NavMap&&) noexcept = default;
  NavMap& operator=(NavMap&&) noexcept = default;

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const std::vector<Point3>& points() const { return points_; }
  const std::vector<Vec3>& normals() const { return normals_; }
  const std::vector<bool>& traversable() const { return traversable_; }
  // Index of each point in the cloud the mesh was built from; may be empty.
  const std::vector<Index>& source_index() const { return source_index_; }
  const Point3& viewpoint() const { return viewpoint_; }
  const KdTree& index() const { return tree_; }

 private:
  std::vector<Point3> points_;
  std::vector<Vec3> normals_;
  std::vector<bool> traversable_;
  std::vector<Index> source_index_;
  Point3 viewpoint_ = Point3::Zero();
  KdTree tree_;
};

NavMap build_navmap(const TriangleMesh& mesh, const TraversabilityConfig& cfg,
                    const Point3& viewpoint);

}  // namespace ovpc
