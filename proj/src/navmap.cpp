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

#include "ovpc/navmap.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ovpc/errors.hpp"

namespace ovpc {

double normalize_heading(double radians) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double h = std::fmod(radians, two_pi);
  if (h <= -std::numbers::pi) h += two_pi;
  if (h > std::numbers::pi) h -= two_pi;
  return h;
}

void RobotBox::validate() const {
  if (!(length > 0.0 && width > 0.0 && height > 0.0)) {
    throw DomainError("robot box extents must be positive");
  }
  if (!std::isfinite(z_offset)) throw DomainError("robot box z_offset must be finite");
}

NearestVisible nearest_visible(const NavMap& map, const Point3& query) {
  if (map.empty()) throw StateError("nearest_visible on an empty navmap");
  const auto hit = map.index().nearest(query);
  NearestVisible out;
  out.index = hit.index;
  out.point = map.points()[hit.index];
  out.normal = map.normals()[hit.index];
  out.traversable = map.traversable()[hit.index];
  out.distance = std::sqrt(hit.squared_distance);
  return out;
}

Pose3 project_state(const NavMap& map, const Se2State& state, double z_ref) {
  const auto hit = nearest_visible(map, Point3(state.x, state.y, z_ref));
  const Vec3 z_axis = hit.normal.normalized();
  const Vec3 heading(std::cos(state.heading), std::sin(state.heading), 0.0);
  Vec3 x_axis = heading - heading.dot(z_axis) * z_axis;
  if (x_axis.norm() < 1e-9) {
    throw DegeneracyError("heading is parallel to the surface normal at map point " +
                              std::to_string(hit.index),
                          1);
  }
  x_axis.normalize();
  const Vec3 y_axis = z_axis.cross(x_axis);

  Eigen::Matrix3d r;
  r.col(0) = x_axis;
  r.col(1) = y_axis;
  r.col(2) = z_axis;
  Pose3 pose;
  pose.translation = hit.point;
  pose.rotation = Eigen::Quaterniond(r).normalized();
  return pose;
}

bool box_contains(const Pose3& pose, const RobotBox& box, const Point3& p) {
  const Vec3 local = pose.rotation.conjugate() * (p - pose.translation);
  return std::abs(local.x()) <= 0.5 * box.length && std::abs(local.y()) <= 0.5 * box.width &&
         local.z() >= box.z_offset && local.z() <= box.z_offset + box.height;
}

CollisionReport collision_check(const NavMap& map, const Pose3& pose, const RobotBox& box) {
  box.validate();
  if (!pose.is_valid()) throw DomainError("collision pose quaternion is not unit length");

  // World-aligned bounds of the oriented box, padded against rounding so the
  // index never misses a point the exact test accepts.
  Eigen::AlignedBox3d bounds;
  for (int corner = 0; corner < 8; ++corner) {
    const Vec3 local((corner & 1 ? 0.5 : -0.5) * box.length, (corner & 2 ? 0.5 : -0.5) * box.width,
                     corner & 4 ? box.z_offset + box.height : box.z_offset);
    bounds.extend(pose.apply(local));
  }
  const double pad = 1e-9 * (1.0 + bounds.max().cwiseAbs().maxCoeff() +
                             bounds.min().cwiseAbs().maxCoeff());
  const Vec3 margin = Vec3::Constant(pad);

  CollisionReport report;
  for (Index i : map.index().box_search(bounds.min() - margin, bounds.max() + margin)) {
    if (!map.traversable()[i] && box_contains(pose, box, map.points()[i])) {
      report.offending_indices.push_back(i);
    }
  }
  report.in_collision = !report.offending_indices.empty();
  return report;
}

}  // namespace ovpc
