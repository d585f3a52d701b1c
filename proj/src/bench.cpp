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

#include "ovpc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <ratio>
#include <sstream>
#include <string>

#include "ovpc/errors.hpp"

namespace ovpc {

BenchStats time_pipeline(std::span<const PointCloud> clouds, const GhprConfig& ghpr,
                         const TraversabilityConfig& trav, int iterations) {
  using Clock = std::chrono::steady_clock;
  static_assert(Clock::is_steady);
  if (std::ratio_greater<Clock::period, std::micro>::value) {
    throw StateError("steady clock resolution is coarser than 1 us");
  }
  if (iterations < 1) throw DomainError("iterations must be at least 1");
  if (clouds.empty()) throw DomainError("no clouds to benchmark");

  auto run_once = [&](std::size_t id) {
    try {
      const TriangleMesh mesh = build_ovpc_mesh(clouds[id], ghpr);
      const NavMap map = build_navmap(mesh, trav, ghpr.viewpoint);
      return map.size();
    } catch (const Error& e) {
      throw GeometryError("cloud " + std::to_string(id) + ": " + e.what());
    }
  };

  BenchStats stats;
  for (std::size_t id = 0; id < clouds.size(); ++id) {
    stats.point_counts.push_back(clouds[id].size());
    run_once(id);  // warm-up
  }

  volatile std::size_t sink = 0;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t id = 0; id < clouds.size(); ++id) {
      const auto t0 = Clock::now();
      sink = sink + run_once(id);
      const auto t1 = Clock::now();
      stats.samples.push_back(
          {id, clouds[id].size(), it, std::chrono::duration<double, std::milli>(t1 - t0).count()});
    }
  }

  const double n = static_cast<double>(stats.samples.size());
  double sum = 0.0;
  stats.min = stats.samples.front().ms;
  stats.max = stats.samples.front().ms;
  for (const auto& s : stats.samples) {
    sum += s.ms;
    stats.min = std::min(stats.min, s.ms);
    stats.max = std::max(stats.max, s.ms);
  }
  stats.mean = sum / n;
  double acc = 0.0;
  for (const auto& s : stats.samples) acc += (s.ms - stats.mean) * (s.ms - stats.mean);
  stats.std = std::sqrt(acc / n);

  stats.histogram.assign(static_cast<std::size_t>(stats.max / BenchStats::kBinMs) + 1, 0);
  for (const auto& s : stats.samples) {
    ++stats.histogram[static_cast<std::size_t>(s.ms / BenchStats::kBinMs)];
  }
  return stats;
}

PointCloud make_bench_cloud(std::size_t points, std::uint64_t seed) {
  constexpr double kSensorHeight = 1.88;
  constexpr double kRange = 15.0;
  constexpr double kNoise = 0.03;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto jitter = [&] { return kNoise * (2.0 * unit(rng) - 1.0); };
  auto ground_z = [](double x, double y) {
    return -kSensorHeight + 0.15 * std::sin(0.5 * x) * std::cos(0.4 * y) + 0.02 * x;
  };

  PointCloud cloud;
  cloud.points.reserve(points);
  const std::size_t n_wall = points / 5;
  const std::size_t n_posts = points / 10;
  const std::size_t n_ground = points - n_wall - n_posts;
  for (std::size_t i = 0; i < n_ground; ++i) {
    // Uniform in range rather than area: denser close to the sensor.
    const double r = 0.8 + (kRange - 0.8) * unit(rng);
    const double a = 2.0 * std::numbers::pi * unit(rng);
    const double x = r * std::cos(a);
    const double y = r * std::sin(a);
    cloud.points.emplace_back(x + jitter(), y + jitter(), ground_z(x, y) + jitter());
  }
  for (std::size_t i = 0; i < n_wall; ++i) {
    // Three quarters of a ring wall, 3 m tall.
    const double a = 1.5 * std::numbers::pi * unit(rng) - 0.25 * std::numbers::pi;
    const double x = 12.0 * std::cos(a);
    const double y = 12.0 * std::sin(a);
    const double z = ground_z(x, y) + 3.0 * unit(rng);
    cloud.points.emplace_back(x + jitter(), y + jitter(), z + jitter());
  }
  const std::array<Eigen::Vector2d, 4> posts{Eigen::Vector2d(4.0, 2.0), Eigen::Vector2d(-3.0, 5.0),
                                             Eigen::Vector2d(-6.0, -4.0), Eigen::Vector2d(2.5, -7.0)};
  for (std::size_t i = 0; i < n_posts; ++i) {
    const auto& c = posts[i % posts.size()];
    const double a = 2.0 * std::numbers::pi * unit(rng);
    const double x = c.x() + 0.15 * std::cos(a);
    const double y = c.y() + 0.15 * std::sin(a);
    const double z = ground_z(x, y) + 2.2 * unit(rng);
    cloud.points.emplace_back(x + jitter(), y + jitter(), z + jitter());
  }
  return cloud;
}

void write_bench_csv(std::ostream& os, const BenchStats& stats) {
  os << "cloud_id,points,iteration,ms\n";
  for (const auto& s : stats.samples) {
    os << s.cloud_id << ',' << s.points << ',' << s.iteration << ',' << std::fixed
       << std::setprecision(6) << s.ms << '\n';
  }
  os << std::defaultfloat;
}

std::string bench_summary(const BenchStats& stats) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "samples: " << stats.samples.size() << "\n";
  os << "mean_ms: " << stats.mean << "\n";
  os << "std_ms: " << stats.std << "\n";
  os << "min_ms: " << stats.min << "\n";
  os << "max_ms: " << stats.max << "\n";
  os << "histogram (" << BenchStats::kBinMs << " ms bins):\n";
  for (std::size_t k = 0; k < stats.histogram.size(); ++k) {
    if (stats.histogram[k] == 0) continue;
    os << "  [" << std::setw(7) << k * BenchStats::kBinMs << ", " << std::setw(7)
       << (k + 1) * BenchStats::kBinMs << ") " << stats.histogram[k] << "\n";
  }
  return os.str();
}

}  // namespace ovpc
