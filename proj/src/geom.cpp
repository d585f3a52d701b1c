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

#include "ovpc/geom.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "ovpc/errors.hpp"

namespace ovpc {

Pose3 Pose3::from_normalized(const Vec3& t, const Eigen::Quaterniond& q) {
  const double n = q.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("pose quaternion has zero or non-finite norm");
  }
  Pose3 pose;
  pose.translation = t;
  pose.rotation = Eigen::Quaterniond(q.coeffs() / n);
  return pose;
}

bool Pose3::is_valid() const {
  return translation.allFinite() && rotation.coeffs().allFinite() &&
         std::abs(rotation.norm() - 1.0) <= kUnitTolerance;
}

Pose3 Pose3::inverse() const {
  Pose3 inv;
  inv.rotation = rotation.conjugate();
  inv.translation = -(inv.rotation * translation);
  return inv;
}

Pose3 Pose3::operator*(const Pose3& rhs) const {
  Pose3 out;
  out.rotation = rotation * rhs.rotation;
  out.translation = rotation * rhs.translation + translation;
  return out;
}

void PointCloud::validate() const {
  if (!intensity.empty() && intensity.size() != points.size()) {
    throw DataError("intensity has " + std::to_string(intensity.size()) +
                    " values for " + std::to_string(points.size()) + " points");
  }
  require_finite(points);
}

void require_finite(std::span<const Point3> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].allFinite()) {
      throw DataError("non-finite coordinate at point index " + std::to_string(i));
    }
  }
}

std::size_t remove_non_finite(PointCloud& cloud) {
  const bool with_intensity = cloud.has_intensity();
  std::size_t kept = 0;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if (!cloud.points[i].allFinite()) continue;
    cloud.points[kept] = cloud.points[i];
    if (with_intensity) cloud.intensity[kept] = cloud.intensity[i];
    ++kept;
  }
  const std::size_t removed = cloud.points.size() - kept;
  cloud.points.resize(kept);
  if (with_intensity) cloud.intensity.resize(kept);
  return removed;
}

PointCloud transform_cloud(const PointCloud& cloud, const Pose3& pose) {
  if (!pose.is_valid()) throw DomainError("pose quaternion is not unit length");
  require_finite(cloud.points);
  const Eigen::Matrix3d r = pose.rotation_matrix();
  PointCloud out;
  out.intensity = cloud.intensity;
  out.points.reserve(cloud.size());
  for (const auto& p : cloud.points) out.points.push_back(r * p + pose.translation);
  return out;
}

TopologyReport mesh_topology_check(const TriangleMesh& mesh) {
  const std::size_t nv = mesh.vertices.size();
  if (nv < 4 || mesh.faces.size() < 4) {
    throw StructuralError("topology check needs at least 4 vertices and 4 faces");
  }
  std::unordered_map<std::uint64_t, std::uint32_t> edge_use;
  edge_use.reserve(mesh.faces.size() * 2);
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const Face& face = mesh.faces[f];
    for (int k = 0; k < 3; ++k) {
      if (face[k] >= nv) {
        throw StructuralError("face " + std::to_string(f) + " references vertex " +
                              std::to_string(face[k]) + " out of range");
      }
    }
    if (face[0] == face[1] || face[1] == face[2] || face[0] == face[2]) {
      throw StructuralError("face " + std::to_string(f) + " repeats a vertex");
    }
    for (int k = 0; k < 3; ++k) {
      std::uint64_t a = face[k];
      std::uint64_t b = face[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      ++edge_use[(a << 32) | b];
    }
  }

  TopologyReport report;
  report.edge_count = edge_use.size();
  for (const auto& [key, count] : edge_use) {
    if (count == 1) {
      ++report.boundary_edge_count;
    } else if (count > 2) {
      ++report.nonmanifold_edge_count;
    }
  }
  report.is_closed = report.boundary_edge_count == 0 && report.nonmanifold_edge_count == 0;
  report.euler_characteristic = static_cast<long>(nv) - static_cast<long>(report.edge_count) +
                                static_cast<long>(mesh.faces.size());
  return report;
}

Vec3 triangle_normal(const Point3& a, const Point3& b, const Point3& c) {
  // Cross the two edges adjacent to the longest one; this keeps the result
  // accurate on slivers.
  const Vec3 ab = b - a;
  const Vec3 bc = c - b;
  const Vec3 ca = a - c;
  const double lab = ab.squaredNorm();
  const double lbc = bc.squaredNorm();
  const double lca = ca.squaredNorm();
  Vec3 n;
  if (lab >= lbc && lab >= lca) {
    n = bc.cross(ca);
  } else if (lbc >= lab && lbc >= lca) {
    n = ca.cross(ab);
  } else {
    n = ab.cross(bc);
  }
  const double len = n.norm();
  if (!(len > 0.0) || !std::isfinite(len)) return Vec3::Zero();
  return n / len;
}

}  // namespace ovpc
