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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ovpc/geom.hpp"
#include "ovpc/traversability.hpp"

namespace ovpc {

// Point clouds: ".xyz" / ".txt" (a "# x y z [intensity]" header, then one
// point per line) or ASCII ".ply". Coordinates are written with 9
// significant digits.
PointCloud read_cloud(const std::filesystem::path& path);
void write_cloud(const std::filesystem::path& path, const PointCloud& cloud);

PointCloud parse_xyz(std::istream& is);
void format_xyz(std::ostream& os, const PointCloud& cloud);
PointCloud parse_cloud_ply(std::istream& is);
void format_cloud_ply(std::ostream& os, const PointCloud& cloud);

struct MeshFile {
  TriangleMesh mesh;  // face_normals recomputed from winding
  std::vector<Vec3> vertex_normals;
  std::vector<bool> vertex_traversable;
  std::vector<bool> face_traversable;
};

/// Vertex records carry x y z nx ny nz traversable, faces carry the index list
/// and traversable. Throws StructuralError when labels do not match the faces.
void write_mesh(const std::filesystem::path& path, const TriangleMesh& mesh,
                std::span<const FaceLabel> labels);
void format_mesh(std::ostream& os, const TriangleMesh& mesh, std::span<const FaceLabel> labels);
MeshFile read_mesh(const std::filesystem::path& path);
MeshFile parse_mesh(std::istream& is);

/// Same vertex layout as a mesh file with zero faces; the viewpoint travels
/// in a "comment viewpoint X Y Z" header line.
void write_navmap(const std::filesystem::path& path, const NavMap& map);
void format_navmap(std::ostream& os, const NavMap& map);
NavMap read_navmap(const std::filesystem::path& path);
NavMap parse_navmap(std::istream& is);

struct StampedPose {
  double timestamp = 0.0;
  Pose3 pose;
};

/// Columns timestamp,x,y,z,qw,qx,qy,qz; a header row is optional.
/// Quaternions are normalized.
std::vector<StampedPose> read_poses(const std::filesystem::path& path);
std::vector<StampedPose> parse_poses(std::istream& is);

/// Flat "key = value" file; '#' starts a comment.
struct RunConfig {
  double gamma = -0.03;
  double alpha_max_deg = 30.0;
  double dh_max = 0.25;
  double voxel_size = 0.2;
  std::size_t min_points_per_voxel = 2;
  std::size_t buffer_capacity = 25;
  Point3 viewpoint = Point3::Zero();
  std::uint64_t seed = 0;

  void validate() const;
  /// Applies one key/value pair; throws ParseError on unknown keys or bad
  /// values, tagged with `line`.
  void set(const std::string& key, const std::string& value, std::size_t line = 0);
};

RunConfig parse_config(std::istream& is);
RunConfig read_config(const std::filesystem::path& path);
void format_config(std::ostream& os, const RunConfig& cfg);

/// Parses "a,b,c" (commas or whitespace) into exactly `count` finite numbers;
/// throws DataError otherwise.
std::vector<double> parse_number_list(const std::string& text, std::size_t count);

}  // namespace ovpc
