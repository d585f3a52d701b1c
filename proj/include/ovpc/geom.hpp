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

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace ovpc {

// World frame is right-handed with z up; gravity points along -z.
using Point3 = Eigen::Vector3d;
using Vec3 = Eigen::Vector3d;
using Index = std::uint32_t;
using Face = std::array<Index, 3>;

inline const Vec3 kUp = Vec3::UnitZ();

/// Rigid transform p -> rotation * p + translation.
struct Pose3 {
  Vec3 translation = Vec3::Zero();
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();

  static constexpr double kUnitTolerance = 1e-9;

  static Pose3 identity() { return {}; }
  /// Normalizes `q`; use when the quaternion comes from user input.
  static Pose3 from_normalized(const Vec3& t, const Eigen::Quaterniond& q);

  bool is_valid() const;
  Point3 apply(const Point3& p) const { return rotation * p + translation; }
  Pose3 inverse() const;
  Eigen::Matrix3d rotation_matrix() const { return rotation.toRotationMatrix(); }
  Pose3 operator*(const Pose3& rhs) const;
};

struct PointCloud {
  std::vector<Point3> points;
  // Empty, or exactly one value per point.
  std::vector<double> intensity;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool has_intensity() const { return !intensity.empty(); }

  /// Throws DataError when intensity is present but mis-sized or any
  /// coordinate is non-finite.
  void validate() const;
};

struct TriangleMesh {
  std::vector<Point3> vertices;
  std::vector<Face> faces;
  std::vector<Vec3> face_normals;
  std::vector<Index> source_index;

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t face_count() const { return faces.size(); }
};

struct TopologyReport {
  bool is_closed = false;
  long euler_characteristic = 0;
  std::size_t edge_count = 0;
  std::size_t boundary_edge_count = 0;
  std::size_t nonmanifold_edge_count = 0;
};

/// Rejects the first non-finite point with a DataError naming its index.
void require_finite(std::span<const Point3> points);

/// Drops non-finite points (and their intensities). Returns the number removed.
std::size_t remove_non_finite(PointCloud& cloud);

PointCloud transform_cloud(const PointCloud& cloud, const Pose3& pose);

TopologyReport mesh_topology_check(const TriangleMesh& mesh);

/// Unit normal of triangle (a, b, c) following right-hand winding, or zero
/// when the triangle has no area at double precision.
Vec3 triangle_normal(const Point3& a, const Point3& b, const Point3& c);

}  // namespace ovpc
