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

struct HullConfig {
  // Absolute tolerance is epsilon_scale * max |input coordinate|.
  double epsilon_scale = 1e-10;
};

/// Closed triangulated hull. `mesh.vertices` are copies of input points (in
/// ascending input order), `mesh.source_index` maps them back, faces wind
/// counter-clockwise seen from outside and `mesh.face_normals` point outward.
///
/// `vertex_on_hull` has one flag per input point. It is set for triangulation
/// vertices and for points lying on the boundary within `epsilon` that the
/// triangulation skipped (coplanar with a facet, on an edge, or duplicates).
struct HullMesh {
  TriangleMesh mesh;
  std::vector<bool> vertex_on_hull;
  double epsilon = 0.0;
};

/// Quickhull in 3-d.
///
/// The initial simplex is taken from the axis-extreme points (lowest index
/// wins ties), points are processed furthest-first from a face stack, and the
/// result depends only on the input order. Throws SizeError below 4 points and
/// DegeneracyError (carrying the detected dimension) when the input is not
/// full-dimensional within epsilon.
HullMesh quickhull3(std::span<const Point3> points, const HullConfig& config = {});

/// True iff q is within `eps` of the inner side of every face plane.
/// Throws StructuralError when the hull mesh is not closed.
bool hull_contains(const HullMesh& hull, const Point3& q, double eps);

}  // namespace ovpc
