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

#include "ovpc/ghpr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ovpc/errors.hpp"

namespace ovpc {

void GhprConfig::validate() const {
  if (!(gamma < 0.0)) throw DomainError("gamma must be negative");
  if (!(min_range > 0.0)) throw DomainError("min_range must be positive");
  if (!viewpoint.allFinite()) throw DomainError("viewpoint must be finite");
}

double kernel_value(double d, double gamma) {
  if (!(d > 0.0)) throw DomainError("kernel distance must be positive");
  return std::pow(d, gamma);
}

VisibleResult ghpr_visible(const PointCloud& cloud, const GhprConfig& config) {
  config.validate();
  require_finite(cloud.points);

  VisibleResult out;
  out.image_cloud.points.reserve(cloud.size());
  out.image_source.reserve(cloud.size());
  for (Index i = 0; i < cloud.size(); ++i) {
    const Vec3 ray = cloud.points[i] - config.viewpoint;
    const double d = ray.norm();
    if (d < config.min_range) {
      ++out.dropped_near;
      continue;
    }
    out.image_cloud.points.push_back(config.viewpoint + (kernel_value(d, config.gamma) / d) * ray);
    out.image_source.push_back(i);
  }
  if (out.image_cloud.size() < 4) {
    throw SizeError("hidden point removal needs at least 4 points beyond min_range, got " +
                    std::to_string(out.image_cloud.size()));
  }

  out.hull = quickhull3(out.image_cloud.points, config.hull);
  for (Index j = 0; j < out.image_source.size(); ++j) {
    if (out.hull.vertex_on_hull[j]) out.visible_indices.push_back(out.image_source[j]);
  }
  return out;
}

namespace {

constexpr double kSliverSine = 1e-9;

// Normal for a face whose original-space triangle has no area: the direction
// perpendicular to its longest edge that leans most toward the viewpoint.
Vec3 sliver_normal(const Point3& a, const Point3& b, const Point3& c, const Point3& viewpoint) {
  Vec3 edge = b - a;
  if ((c - b).squaredNorm() > edge.squaredNorm()) edge = c - b;
  if ((a - c).squaredNorm() > edge.squaredNorm()) edge = a - c;
  const Vec3 to_view = viewpoint - (a + b + c) / 3.0;
  Vec3 n = to_view;
  if (edge.squaredNorm() > 0.0) {
    const Vec3 u = edge.normalized();
    n = to_view - to_view.dot(u) * u;
    if (n.norm() < 1e-12 * std::max(1.0, to_view.norm())) {
      n = u.unitOrthogonal();
    }
  }
  if (!(n.norm() > 0.0)) return kUp;
  return n.normalized();
}

}  // namespace

TriangleMesh lift_hull_mesh(const PointCloud& cloud, const VisibleResult& visible,
                            const Point3& viewpoint) {
  const TriangleMesh& hull = visible.hull.mesh;
  TriangleMesh mesh;
  mesh.vertices.reserve(hull.vertex_count());
  mesh.source_index.reserve(hull.vertex_count());
  for (Index image_idx : hull.source_index) {
    const Index src = visible.image_source[image_idx];
    mesh.source_index.push_back(src);
    mesh.vertices.push_back(cloud.points[src]);
  }

  mesh.faces.reserve(hull.face_count());
  mesh.face_normals.reserve(hull.face_count());
  for (const Face& f : hull.faces) {
    Face face = f;
    const Point3& a = mesh.vertices[face[0]];
    const Point3& b = mesh.vertices[face[1]];
    const Point3& c = mesh.vertices[face[2]];
    const double longest =
        std::max({(b - a).squaredNorm(), (c - b).squaredNorm(), (a - c).squaredNorm()});
    Vec3 n = triangle_normal(a, b, c);
    // Collinear lifted vertices (regular grids) leave only a rounding-noise cross product.
    if (n.isZero() || (b - a).cross(c - a).norm() <= kSliverSine * longest) {
      n = sliver_normal(a, b, c, viewpoint);
    } else if (n.dot(viewpoint - (a + b + c) / 3.0) < 0.0) {
      n = -n;
      std::swap(face[1], face[2]);
    }
    mesh.faces.push_back(face);
    mesh.face_normals.push_back(n);
  }
  return mesh;
}

TriangleMesh build_ovpc_mesh(const PointCloud& cloud, const GhprConfig& config) {
  return lift_hull_mesh(cloud, ghpr_visible(cloud, config), config.viewpoint);
}

}  // namespace ovpc
