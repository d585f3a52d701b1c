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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ovpc/geom.hpp"
#include "ovpc/ghpr.hpp"
#include "ovpc/kdtree.hpp"
#include "ovpc/traversability.hpp"

namespace ovpc {

/// Flat ground with an incline hinged at x = incline_start_x, sampled on a
/// regular grid, replicated into several perturbed scans.
struct SceneSpec {
  double extent = 20.0;  // meters, square side
  double spacing = 0.2;  // meters
  double slope_deg = 0.0;
  int scans = 5;
  double point_noise = 0.05;    // meters, uniform per axis
  double rot_noise_deg = 0.5;   // uniform per Euler angle, per scan
  double trans_noise = 0.1;     // meters, uniform per axis, per scan
  double viewpoint_height = 1.88;
  double incline_start_x = 5.0;
  std::uint64_t seed = 0;

  void validate() const;
  /// Sensor position: above the scene origin.
  Point3 viewpoint() const { return {0.0, 0.0, viewpoint_height}; }
  SceneSpec noiseless() const;
};

enum class PlaneId : std::uint8_t { kGround = 0, kIncline = 1, kRoof = 2 };

struct SyntheticScene {
  PointCloud bundled_cloud;
  std::vector<Vec3> gt_normals;
  std::vector<PlaneId> gt_plane_id;
  Point3 viewpoint = Point3::Zero();
};

/// Number of grid samples per scan on the ground and on the incline.
struct GridCounts {
  std::size_t ground = 0;
  std::size_t incline = 0;
};
GridCounts scene_grid_counts(const SceneSpec& spec);

SyntheticScene gen_scene(const SceneSpec& spec);

/// Flat ground over the full extent plus a horizontal roof at `roof_height`
/// covering x >= 0. Roof ground truth normals point down. Uses the spec's
/// extent, spacing, scans, noise and seed; slope is ignored.
SyntheticScene gen_overhang_scene(const SceneSpec& spec, double roof_height = 2.5);

/// Normal from the covariance of the points within `radius` of point `index`
/// (itself included), turned to face `viewpoint`. Throws SizeError with fewer
/// than 3 neighbours and DegeneracyError when the two smallest eigenvalues tie.
Vec3 pca_normal(std::span<const Point3> points, const KdTree& tree, Index index, double radius,
                const Point3& viewpoint);
Vec3 pca_normal(const PointCloud& cloud, Index index, double radius, const Point3& viewpoint);

/// Unsigned angle between two unit vectors' lines, in degrees within [0, 90].
double angular_error_deg(const Vec3& a, const Vec3& b);

/// Flags points whose xy position lies at least `margin` inside the convex
/// footprint of `points`.
std::vector<bool> footprint_interior(std::span<const Point3> points, double margin);

struct SweepOptions {
  SceneSpec scene;
  double slope_min = 0.0;
  double slope_max = 35.0;
  double step = 1.0;
  int trials = 3;
  // viewpoint is taken from the scene
  GhprConfig ghpr;
  TraversabilityConfig traversability;
  double pca_radius = 0.3;
  double voxel_size = 0.2;
  std::size_t min_points_per_voxel = 2;
  double interior_margin = 1.0;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SweepRow {
  double slope_deg = 0.0;
  std::string method;  // "ovpc" or "pca"
  double mean_error_deg = 0.0;
  double std_error_deg = 0.0;  // population
  std::size_t n_points = 0;
  // ovpc only: statistics over every vertex, rim included.
  double mean_error_all_deg = 0.0;
  std::size_t n_points_all = 0;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

struct ErrorSummary {
  double mean = 0.0;
  double std = 0.0;
  std::size_t n = 0;
};

/// Pools the rows of one method into a single mean and population std.
ErrorSummary overall(const SweepTable& table, const std::string& method);

std::vector<double> sweep_slopes(double slope_min, double slope_max, double step);

/// Per-trial seed derived from the template seed; independent of scheduling.
std::uint64_t trial_seed(std::uint64_t base, std::size_t slope_index, int trial);

SweepTable run_normal_sweep(const SweepOptions& options);

/// Header: slope_deg,method,mean_error_deg,std_error_deg,n_points
void write_sweep_csv(std::ostream& os, const SweepTable& table);

}  // namespace ovpc
