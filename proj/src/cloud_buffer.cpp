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

#include "ovpc/cloud_buffer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ovpc/errors.hpp"

namespace ovpc {

void BufferConfig::validate() const {
  if (capacity < 1) throw DomainError("buffer capacity must be at least 1");
  if (!(voxel_size > 0.0)) throw DomainError("voxel_size must be positive");
  if (min_points_per_voxel < 1) throw DomainError("min_points_per_voxel must be at least 1");
}

VoxelKey voxel_key(const Point3& p, double voxel_size) {
  return {static_cast<std::int64_t>(std::floor(p.x() / voxel_size)),
          static_cast<std::int64_t>(std::floor(p.y() / voxel_size)),
          static_cast<std::int64_t>(std::floor(p.z() / voxel_size))};
}

std::vector<VoxelCell> voxel_cells(std::span<const Point3> points, double voxel_size) {
  if (!(voxel_size > 0.0)) throw DomainError("voxel_size must be positive");
  std::vector<std::pair<VoxelKey, Index>> keyed;
  keyed.reserve(points.size());
  for (Index i = 0; i < points.size(); ++i) keyed.emplace_back(voxel_key(points[i], voxel_size), i);
  std::sort(keyed.begin(), keyed.end());

  std::vector<VoxelCell> cells;
  for (std::size_t i = 0; i < keyed.size();) {
    VoxelCell cell{keyed[i].first, {}};
    for (; i < keyed.size() && keyed[i].first == cell.key; ++i) {
      cell.members.push_back(keyed[i].second);
    }
    cells.push_back(std::move(cell));
  }
  return cells;
}

PointCloud voxel_filter(const PointCloud& cloud, double voxel_size, std::size_t min_points) {
  const auto cells = voxel_cells(cloud.points, voxel_size);
  const bool with_intensity = cloud.has_intensity();
  PointCloud out;
  for (const auto& cell : cells) {
    if (cell.members.size() < std::max<std::size_t>(min_points, 1)) continue;
    Vec3 sum = Vec3::Zero();
    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
    Vec3 hi = -lo;
    double intensity = 0.0;
    for (Index m : cell.members) {
      sum += cloud.points[m];
      lo = lo.cwiseMin(cloud.points[m]);
      hi = hi.cwiseMax(cloud.points[m]);
      if (with_intensity) intensity += cloud.intensity[m];
    }
    const double n = static_cast<double>(cell.members.size());
    // Clamp to the member range so rounding cannot leave the voxel.
    out.points.push_back((sum / n).cwiseMax(lo).cwiseMin(hi));
    if (with_intensity) out.intensity.push_back(intensity / n);
  }
  return out;
}

CloudBuffer::CloudBuffer(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ < 1) throw DomainError("buffer capacity must be at least 1");
}

void CloudBuffer::push_scan(Scan scan) {
  if (!scan.pose.is_valid()) throw DomainError("scan pose quaternion is not unit length");
  scan.cloud.validate();
  auto entry = std::make_shared<const Scan>(std::move(scan));
  std::lock_guard lock(mutex_);
  if (!scans_.empty() && entry->timestamp < scans_.back()->timestamp) {
    throw OrderingError("scan timestamp " + std::to_string(entry->timestamp) +
                        " precedes the last buffered timestamp " +
                        std::to_string(scans_.back()->timestamp));
  }
  scans_.push_back(std::move(entry));
  while (scans_.size() > capacity_) scans_.pop_front();
}

std::size_t CloudBuffer::size() const {
  std::lock_guard lock(mutex_);
  return scans_.size();
}

std::vector<std::shared_ptr<const Scan>> CloudBuffer::snapshot() const {
  std::lock_guard lock(mutex_);
  return {scans_.begin(), scans_.end()};
}

PointCloud CloudBuffer::assemble(const Pose3& target, const BufferConfig& cfg) const {
  cfg.validate();
  const auto scans = snapshot();
  if (scans.empty()) throw StateError("assemble on an empty cloud buffer");

  const Pose3 to_target = target.inverse();
  const bool with_intensity = std::all_of(scans.begin(), scans.end(), [](const auto& s) {
    return s->cloud.has_intensity();
  });
  PointCloud merged;
  for (const auto& scan : scans) {
    PointCloud aligned = transform_cloud(scan->cloud, to_target * scan->pose);
    merged.points.insert(merged.points.end(), aligned.points.begin(), aligned.points.end());
    if (with_intensity) {
      merged.intensity.insert(merged.intensity.end(), aligned.intensity.begin(),
                              aligned.intensity.end());
    }
  }
  return voxel_filter(merged, cfg.voxel_size, cfg.min_points_per_voxel);
}

}  // namespace ovpc
