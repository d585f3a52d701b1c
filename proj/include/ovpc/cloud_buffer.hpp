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

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "ovpc/geom.hpp"

namespace ovpc {

struct Scan {
  PointCloud cloud;  // sensor frame
  Pose3 pose;        // sensor -> odometry
  double timestamp = 0.0;
};

struct BufferConfig {
  std::size_t capacity = 25;
  double voxel_size = 0.2;
  std::size_t min_points_per_voxel = 2;

  void validate() const;
};

using VoxelKey = std::array<std::int64_t, 3>;

struct VoxelCell {
  VoxelKey key;
  std::vector<Index> members;  // ascending input indices
};

VoxelKey voxel_key(const Point3& p, double voxel_size);

/// Occupied voxels in ascending (ix, iy, iz) order.
std::vector<VoxelCell> voxel_cells(std::span<const Point3> points, double voxel_size);

/// One centroid per voxel holding at least `min_points` inputs, in ascending
/// voxel order. Intensity, when present, is averaged the same way.
PointCloud voxel_filter(const PointCloud& cloud, double voxel_size, std::size_t min_points);

/// Ring of the most recent scans. One thread pushes; any thread may assemble
/// from a snapshot while pushes continue.
class CloudBuffer {
 public:
  explicit CloudBuffer(std::size_t capacity = 25);

  /// Throws OrderingError, leaving the buffer unchanged, when the timestamp
  /// goes backwards.
  void push_scan(Scan scan);

  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }
  std::vector<std::shared_ptr<const Scan>> snapshot() const;

  /// Aligns every buffered scan into the `target` frame, concatenates and
  /// voxel-filters. Throws StateError on an empty buffer.
  PointCloud assemble(const Pose3& target, const BufferConfig& cfg) const;

 private:
  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::deque<std::shared_ptr<const Scan>> scans_;
};

}  // namespace ovpc
