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
#include "ovpc/traversability.hpp"

namespace ovpc {

struct BenchSample {
  std::size_t cloud_id = 0;
  std::size_t points = 0;
  int iteration = 0;
  double ms = 0.0;
};

struct BenchStats {
  std::vector<BenchSample> samples;
  std::vector<std::size_t> point_counts;  // per cloud
  double mean = 0.0;
  double std = 0.0;  // population
  double min = 0.0;
  double max = 0.0;
  static constexpr double kBinMs = 2.0;
  std::vector<std::size_t> histogram;  // bin k covers [2k, 2k + 2) ms
};

/// Times build_ovpc_mesh + build_navmap for every cloud, single-threaded,
/// after one untimed warm-up pass. Throws StateError when the monotonic clock
/// is coarser than 1 us, and rethrows pipeline failures as GeometryError
/// naming the cloud.
BenchStats time_pipeline(std::span<const PointCloud> clouds, const GhprConfig& ghpr,
                         const TraversabilityConfig& trav, int iterations);

/// Robot-centric synthetic bundle of exactly `points` points around a sensor
/// at the origin: bumpy ground 1.88 m below, a partial perimeter wall and a
/// few posts, with range-dependent sampling density.
PointCloud make_bench_cloud(std::size_t points, std::uint64_t seed);

/// Header: cloud_id,points,iteration,ms
void write_bench_csv(std::ostream& os, const BenchStats& stats);
std::string bench_summary(const BenchStats& stats);

}  // namespace ovpc
