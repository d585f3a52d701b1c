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

#include "ovpc/traversability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ovpc/errors.hpp"

namespace ovpc {

void TraversabilityConfig::validate() const {
  if (!(alpha_max > 0.0 && alpha_max <= std::numbers::pi / 2)) {
    throw DomainError("alpha_max must lie in (0, pi/2]");
  }
  if (!(dh_max > 0.0)) throw DomainError("dh_max must be positive");
}

std::vector<FaceLabel> face_labels(const TriangleMesh& mesh, const TraversabilityConfig& cfg) {
  cfg.validate();
  if (mesh.face_normals.size() != mesh.faces.size()) {
    throw StructuralError("mesh has " + std::to_string(mesh.face_normals.size()) +
                          " normals for " + std::to_string(mesh.faces.size()) + " faces");
  }
  std::vector<FaceLabel> labels(mesh.faces.size());
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    const Vec3& n = mesh.face_normals[f];
    if (!(std::abs(n.norm() - 1.0) <= 1e-6)) {
      throw StructuralError("face " + std::to_string(f) + " has a non-unit normal");
    }
    const auto& face = mesh.faces[f];
    const double z0 = mesh.vertices[face[0]].z();
    const double z1 = mesh.vertices[face[1]].z();
    const double z2 = mesh.vertices[face[2]].z();
    const double spread = std::max({z0, z1, z2}) - std::min({z0, z1, z2});

    FaceLabel& label = labels[f];
    label.surface_angle = std::acos(std::clamp(n.dot(kUp), -1.0, 1.0));
    label.traversable = label.surface_angle <= cfg.alpha_max && spread <= cfg.dh_max;
  }
  return labels;
}

VertexAttributes vertex_attributes(const TriangleMesh& mesh, std::span<const FaceLabel> labels) {
  if (labels.size() != mesh.faces.size()) {
    throw StructuralError("got " + std::to_string(labels.size()) + " labels for " +
                          std::to_string(mesh.faces.size()) + " faces");
  }
  const std::size_t nv = mesh.vertices.size();
  std::vector<Vec3> sum(nv, Vec3::Zero());
  std::vector<int> first_face(nv, -1);
  VertexAttributes out;
  out.traversable.assign(nv, true);
  for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
    for (Index v : mesh.faces[f]) {
      if (v >= nv) throw StructuralError("face " + std::to_string(f) + " index out of range");
      sum[v] += mesh.face_normals[f];
      if (first_face[v] < 0) first_face[v] = static_cast<int>(f);
      if (!labels[f].traversable) out.traversable[v] = false;
    }
  }
  out.normals.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (first_face[v] < 0) {
      throw StructuralError("vertex " + std::to_string(v) + " has no incident face");
    }
    const double len = sum[v].norm();
    // Opposing faces can cancel exactly; fall back to the first incident face.
    out.normals[v] = len > 1e-12 ? Vec3(sum[v] / len) : mesh.face_normals[first_face[v]];
  }
  return out;
}

NavMap::NavMap(std::vector<Point3> points, std::vector<Vec3> normals,
               std::vector<bool> traversable, Point3 viewpoint, std::vector<Index> source_index)
    : points_(std::move(points)),
      normals_(std::move(normals)),
      traversable_(std::move(traversable)),
      source_index_(std::move(source_index)),
      viewpoint_(std::move(viewpoint)) {
  if (normals_.size() != points_.size() || traversable_.size() != points_.size() ||
      (!source_index_.empty() && source_index_.size() != points_.size())) {
    throw StructuralError("navmap attribute arrays differ in length");
  }
  tree_ = KdTree(points_);
}

NavMap::NavMap(const NavMap& other)
    : points_(other.points_),
      normals_(other.normals_),
      traversable_(other.traversable_),
      source_index_(other.source_index_),
      viewpoint_(other.viewpoint_),
      tree_(points_) {}

NavMap& NavMap::operator=(const NavMap& other) {
  if (this != &other) {
    NavMap copy(other);
    *this = std::move(copy);
  }
  return *this;
}

NavMap build_navmap(const TriangleMesh& mesh, const TraversabilityConfig& cfg,
                    const Point3& viewpoint) {
  const auto labels = face_labels(mesh, cfg);
  auto attrs = vertex_attributes(mesh, labels);
  return NavMap(mesh.vertices, std::move(attrs.normals), std::move(attrs.traversable), viewpoint,
                mesh.source_index);
}

}  // namespace ovpc
