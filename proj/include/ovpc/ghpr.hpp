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

#include <vector>

#include "ovpc/convex_hull.hpp"
#include "ovpc/geom.hpp"

namespace ovpc {

struct GhprConfig {
  Point3 viewpoint = Point3::Zero();
  // Exponent of the radial kernel d^gamma; must be negative. Values in
  // [-0.03, -0.01] suit LiDAR clouds with ~0.2 m spacing.
  double gamma = -0.03;
  // Points closer than this to the viewpoint are discarded (self returns).
  double min_range = 1e-6;
  HullConfig hull;

  void validate() const;
};

/// Radial kernel d^gamma. Throws DomainError for d <= 0.
double kernel_value(double d, double gamma);

struct VisibleResult {
  // Input-cloud indices whose images are on the hull, ascending.
  std::vector<Index> visible_indices;
  // Images of the usable points, in input order.
  PointCloud image_cloud;
  // image_cloud index -> input index.
  std::vector<Index> image_source;
  // Hull over image_cloud; its source_index refers to image_cloud.
  HullMesh hull;
  std::size_t dropped_near = 0;
};

/// Hidden point removal. The viewpoint's own image is not part of the hull.
VisibleResult ghpr_visible(const PointCloud& cloud, const GhprConfig& config);

/// Lifts the hull connectivity in `visible` onto the original coordinates of
/// `cloud`. Face normals are recomputed from the original points and face
/// the viewpoint; winding follows the normal.
TriangleMesh lift_hull_mesh(const PointCloud& cloud, const VisibleResult& visible,
                            const Point3& viewpoint);

TriangleMesh build_ovpc_mesh(const PointCloud& cloud, const GhprConfig& config);

}  // namespace ovpc
