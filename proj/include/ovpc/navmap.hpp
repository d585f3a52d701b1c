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

#include "ovpc/geom.hpp"
#include "ovpc/traversability.hpp"

namespace ovpc {

/// Wraps an angle into (-pi, pi].
double normalize_heading(double radians);

struct Se2State {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;  // radians, (-pi, pi]

  static Se2State make(double x, double y, double heading) {
    return {x, y, normalize_heading(heading)};
  }
};

/// Robot footprint in the pose frame: x in [-L/2, L/2], y in [-W/2, W/2],
/// z in [z_offset, z_offset + H].
struct RobotBox {
  double length = 0.0;
  double width = 0.0;
  double height = 0.0;
  double z_offset = 0.0;

  void validate() const;
};

struct CollisionReport {
  bool in_collision = false;
  std::vector<Index> offending_indices;  // ascending
};

struct NearestVisible {
  Index index = 0;
  Point3 point = Point3::Zero();
  Vec3 normal = Vec3::UnitZ();
  bool traversable = false;
  double distance = 0.0;
};

/// Throws StateError on an empty map. Ties go to the lowest index.
NearestVisible nearest_visible(const NavMap& map, const Point3& query);

/// Places the state on the surface at the nearest map point to (x, y, z_ref):
/// body z follows the point normal and body x is the heading direction
/// projected onto the surface plane. Throws DegeneracyError when the heading
/// has no component in that plane.
Pose3 project_state(const NavMap& map, const Se2State& state, double z_ref);

/// Exact containment test shared by the indexed query and linear scans.
bool box_contains(const Pose3& pose, const RobotBox& box, const Point3& p);

/// Non-traversable map points inside the pose-aligned box.
CollisionReport collision_check(const NavMap& map, const Pose3& pose, const RobotBox& box);

}  // namespace ovpc
