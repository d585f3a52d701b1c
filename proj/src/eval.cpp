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

#include "ovpc/eval.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <thread>

#include "ovpc/cloud_buffer.hpp"
#include "ovpc/errors.hpp"

namespace ovpc {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::size_t grid_steps(double length, double spacing) {
  if (!(length >= 0.0)) return 0;
  return static_cast<std::size_t>(std::floor(length / spacing + 1e-9));
}

SyntheticScene replicate_scans(const SceneSpec& spec, const std::vector<Point3>& base,
                               const std::vector<PlaneId>& plane,
                               const std::vector<Vec3>& normals) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  SyntheticScene scene;
  scene.viewpoint = spec.viewpoint();
  const std::size_t total = base.size() * static_cast<std::size_t>(spec.scans);
  scene.bundled_cloud.points.reserve(total);
  scene.gt_normals.reserve(total);
  scene.gt_plane_id.reserve(total);
  for (int s = 0; s < spec.scans; ++s) {
    const double roll = spec.rot_noise_deg * kDeg * unit(rng);
    const double pitch = spec.rot_noise_deg * kDeg * unit(rng);
    const double yaw = spec.rot_noise_deg * kDeg * unit(rng);
    Vec3 t;
    for (int a = 0; a < 3; ++a) t[a] = spec.trans_noise * unit(rng);
    const Eigen::Matrix3d r = (Eigen::AngleAxisd(yaw, Vec3::UnitZ()) *
                               Eigen::AngleAxisd(pitch, Vec3::UnitY()) *
                               Eigen::AngleAxisd(roll, Vec3::UnitX()))
                                  .toRotationMatrix();
    for (std::size_t i = 0; i < base.size(); ++i) {
      Vec3 noise;
      for (int a = 0; a < 3; ++a) noise[a] = spec.point_noise * unit(rng);
      scene.bundled_cloud.points.push_back(r * (base[i] + noise) + t);
      scene.gt_plane_id.push_back(plane[i]);
      scene.gt_normals.push_back(normals[i]);
    }
  }
  return scene;
}

}  // namespace

void SceneSpec::validate() const {
  if (!(extent > 0.0) || !(spacing > 0.0)) throw DomainError("extent and spacing must be positive");
  if (!(slope_deg >= 0.0 && slope_deg <= 89.0)) throw DomainError("slope_deg must lie in [0, 89]");
  if (scans < 1) throw DomainError("scene needs at least one scan");
  if (!(point_noise >= 0.0 && rot_noise_deg >= 0.0 && trans_noise >= 0.0)) {
    throw DomainError("noise magnitudes must be non-negative");
  }
  if (!std::isfinite(viewpoint_height) || !std::isfinite(incline_start_x)) {
    throw DomainError("scene layout values must be finite");
  }
}

SceneSpec SceneSpec::noiseless() const {
  SceneSpec s = *this;
  s.point_noise = 0.0;
  s.rot_noise_deg = 0.0;
  s.trans_noise = 0.0;
  return s;
}

GridCounts scene_grid_counts(const SceneSpec& spec) {
  const double half = spec.extent / 2.0;
  const double hinge = std::min(spec.incline_start_x, half);
  const std::size_t ny = grid_steps(spec.extent, spec.spacing) + 1;
  GridCounts counts;
  if (hinge >= -half) counts.ground = (grid_steps(hinge + half, spec.spacing) + 1) * ny;
  const double run = half - std::max(hinge, -half);
  if (run > 0.0) {
    const double along = run / std::cos(spec.slope_deg * kDeg);
    counts.incline = grid_steps(along, spec.spacing) * ny;
  }
  return counts;
}

SyntheticScene gen_scene(const SceneSpec& spec) {
  spec.validate();
  const double half = spec.extent / 2.0;
  const double hinge = std::min(spec.incline_start_x, half);
  const double slope = spec.slope_deg * kDeg;
  const std::size_t ny = grid_steps(spec.extent, spec.spacing) + 1;

  std::vector<Point3> base;
  std::vector<PlaneId> plane;
  if (hinge >= -half) {
    const std::size_t nx = grid_steps(hinge + half, spec.spacing) + 1;
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < ny; ++j) {
        base.emplace_back(-half + i * spec.spacing, -half + j * spec.spacing, 0.0);
        plane.push_back(PlaneId::kGround);
      }
    }
  }
  const double start = std::max(hinge, -half);
  if (half - start > 0.0) {
    // Sampled along the slope so in-plane spacing matches the ground.
    const std::size_t nu = grid_steps((half - start) / std::cos(slope), spec.spacing);
    for (std::size_t k = 1; k <= nu; ++k) {
      const double u = k * spec.spacing;
      for (std::size_t j = 0; j < ny; ++j) {
        base.emplace_back(start + u * std::cos(slope), -half + j * spec.spacing, u * std::sin(slope));
        plane.push_back(PlaneId::kIncline);
      }
    }
  }
  const Vec3 incline_normal(-std::sin(slope), 0.0, std::cos(slope));
  std::vector<Vec3> normals;
  normals.reserve(plane.size());
  for (PlaneId id : plane) normals.push_back(id == PlaneId::kGround ? kUp : incline_normal);
  return replicate_scans(spec, base, plane, normals);
}

SyntheticScene gen_overhang_scene(const SceneSpec& spec, double roof_height) {
  spec.validate();
  if (!(roof_height > spec.viewpoint_height)) {
    throw DomainError("roof must sit above the viewpoint");
  }
  const double half = spec.extent / 2.0;
  const std::size_t n = grid_steps(spec.extent, spec.spacing) + 1;
  std::vector<Point3> base;
  std::vector<PlaneId> plane;
  std::vector<Vec3> normals;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = -half + i * spec.spacing;
      const double y = -half + j * spec.spacing;
      base.emplace_back(x, y, 0.0);
      plane.push_back(PlaneId::kGround);
      normals.push_back(kUp);
      if (x >= 0.0) {
        base.emplace_back(x, y, roof_height);
        plane.push_back(PlaneId::kRoof);
        normals.push_back(-kUp);
      }
    }
  }
  return replicate_scans(spec, base, plane, normals);
}

Vec3 pca_normal(std::span<const Point3> points, const KdTree& tree, Index index, double radius,
                const Point3& viewpoint) {
  const Point3& center = points[index];
  const auto neighbors = tree.radius_search(center, radius);
  if (neighbors.size() < 3) {
    throw SizeError("pca normal needs 3 neighbours within radius, found " +
                    std::to_string(neighbors.size()));
  }
  Vec3 mean = Vec3::Zero();
  for (Index n : neighbors) mean += points[n];
  mean /= static_cast<double>(neighbors.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (Index n : neighbors) {
    const Vec3 d = points[n] - mean;
    cov += d * d.transpose();
  }
  cov /= static_cast<double>(neighbors.size());

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(cov);
  const Vec3 lambda = solver.eigenvalues();  // ascending
  if (lambda[1] - lambda[0] <= 1e-12 * std::max(lambda[2], std::numeric_limits<double>::min())) {
    throw DegeneracyError("pca neighbourhood has no unique normal direction", 1);
  }
  Vec3 normal = solver.eigenvectors().col(0).normalized();
  if (normal.dot(viewpoint - center) < 0.0) normal = -normal;
  return normal;
}

Vec3 pca_normal(const PointCloud& cloud, Index index, double radius, const Point3& viewpoint) {
  if (index >= cloud.size()) throw DomainError("pca normal index out of range");
  const KdTree tree(cloud.points);
  return pca_normal(cloud.points, tree, index, radius, viewpoint);
}

double angular_error_deg(const Vec3& a, const Vec3& b) {
  if (!(std::abs(a.norm() - 1.0) <= 1e-6) || !(std::abs(b.norm() - 1.0) <= 1e-6)) {
    throw DomainError("angular error needs unit vectors");
  }
  return std::acos(std::clamp(std::abs(a.dot(b)), 0.0, 1.0)) / kDeg;
}

std::vector<bool> footprint_interior(std::span<const Point3> points, double margin) {
  using P2 = Eigen::Vector2d;
  std::vector<P2> xy;
  xy.reserve(points.size());
  for (const auto& p : points) xy.emplace_back(p.x(), p.y());
  std::vector<P2> sorted = xy;
  std::sort(sorted.begin(), sorted.end(), [](const P2& a, const P2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<bool> inside(points.size(), false);
  if (sorted.size() < 3) return inside;

  // Andrew's monotone chain, counter-clockwise.
  auto cross = [](const P2& o, const P2& a, const P2& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
  };
  std::vector<P2> hull(2 * sorted.size());
  std::size_t k = 0;
  for (const auto& p : sorted) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = sorted.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], sorted[i]) <= 0.0) --k;
    hull[k++] = sorted[i];
  }
  hull.resize(k - 1);

  for (std::size_t i = 0; i < xy.size(); ++i) {
    double depth = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < hull.size(); ++e) {
      const P2& a = hull[e];
      const P2& b = hull[(e + 1) % hull.size()];
      const P2 edge = b - a;
      // Inward normal of a counter-clockwise edge is its left perpendicular.
      const double d = (edge.x() * (xy[i].y() - a.y()) - edge.y() * (xy[i].x() - a.x())) / edge.norm();
      depth = std::min(depth, d);
    }
    inside[i] = depth >= margin;
  }
  return inside;
}

ErrorSummary overall(const SweepTable& table, const std::string& method) {
  double sum = 0.0;
  double sum_sq = 0.0;
  ErrorSummary s;
  for (const auto& row : table.rows) {
    if (row.method != method || row.n_points == 0) continue;
    const double n = static_cast<double>(row.n_points);
    sum += row.mean_error_deg * n;
    sum_sq += n * (row.std_error_deg * row.std_error_deg + row.mean_error_deg * row.mean_error_deg);
    s.n += row.n_points;
  }
  if (s.n == 0) return s;
  const double n = static_cast<double>(s.n);
  s.mean = sum / n;
  s.std = std::sqrt(std::max(0.0, sum_sq / n - s.mean * s.mean));
  return s;
}

std::vector<double> sweep_slopes(double slope_min, double slope_max, double step) {
  if (!(step > 0.0)) throw DomainError("sweep step must be positive");
  if (!(slope_max >= slope_min)) throw DomainError("slope_max must not be below slope_min");
  const auto count = static_cast<std::size_t>(std::floor((slope_max - slope_min) / step + 1e-9)) + 1;
  std::vector<double> slopes(count);
  for (std::size_t i = 0; i < count; ++i) slopes[i] = slope_min + static_cast<double>(i) * step;
  return slopes;
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t slope_index, int trial) {
  // splitmix64 over a packed (base, slope, trial) word
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (1 + (slope_index << 20) + static_cast<std::uint64_t>(trial));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct TrialErrors {
  std::vector<double> ovpc;      // interior vertices
  std::vector<double> ovpc_all;  // every vertex
  std::vector<double> pca;       // interior vertices with a valid neighbourhood
};

TrialErrors run_trial(const SweepOptions& options, double slope, std::uint64_t seed) {
  SceneSpec spec = options.scene;
  spec.slope_deg = slope;
  spec.seed = seed;
  const SyntheticScene scene = gen_scene(spec);

  // Bundle the scans the way the cloud buffer does; the ground truth of a
  // voxel is the mean generating normal of its members.
  const PointCloud cloud =
      voxel_filter(scene.bundled_cloud, options.voxel_size, options.min_points_per_voxel);
  std::vector<Vec3> gt;
  gt.reserve(cloud.size());
  for (const auto& cell : voxel_cells(scene.bundled_cloud.points, options.voxel_size)) {
    if (cell.members.size() < std::max<std::size_t>(options.min_points_per_voxel, 1)) continue;
    Vec3 n = Vec3::Zero();
    for (Index m : cell.members) n += scene.gt_normals[m];
    gt.push_back(n.normalized());
  }

  GhprConfig ghpr = options.ghpr;
  ghpr.viewpoint = scene.viewpoint;
  const NavMap nav = build_navmap(build_ovpc_mesh(cloud, ghpr), options.traversability, ghpr.viewpoint);
  const auto interior = footprint_interior(cloud.points, options.interior_margin);
  const KdTree tree(cloud.points);

  TrialErrors errors;
  for (std::size_t i = 0; i < nav.size(); ++i) {
    const Index src = nav.source_index()[i];
    const double e = angular_error_deg(nav.normals()[i], gt[src]);
    errors.ovpc_all.push_back(e);
    if (!interior[src]) continue;
    errors.ovpc.push_back(e);
    try {
      const Vec3 n = pca_normal(cloud.points, tree, src, options.pca_radius, ghpr.viewpoint);
      errors.pca.push_back(angular_error_deg(n, gt[src]));
    } catch (const GeometryError&) {
      // no usable neighbourhood; the point is left out of the pca statistics
    }
  }
  return errors;
}

void summarize(const std::vector<const std::vector<double>*>& parts, double& mean, double& stddev,
               std::size_t& n) {
  n = 0;
  double sum = 0.0;
  for (const auto* p : parts) {
    n += p->size();
    for (double v : *p) sum += v;
  }
  if (n == 0) {
    mean = stddev = 0.0;
    return;
  }
  mean = sum / static_cast<double>(n);
  double acc = 0.0;
  for (const auto* p : parts) {
    for (double v : *p) acc += (v - mean) * (v - mean);
  }
  stddev = std::sqrt(acc / static_cast<double>(n));
}

}  // namespace

SweepTable run_normal_sweep(const SweepOptions& options) {
  if (options.trials < 1) throw DomainError("sweep needs at least one trial");
  options.scene.validate();
  const auto slopes = sweep_slopes(options.slope_min, options.slope_max, options.step);
  const std::size_t trials = static_cast<std::size_t>(options.trials);
  const std::size_t tasks = slopes.size() * trials;

  std::vector<TrialErrors> results(tasks);
  std::vector<std::exception_ptr> failures(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      const std::size_t s = t / trials;
      const int trial = static_cast<int>(t % trials);
      try {
        results[t] = run_trial(options, slopes[s], trial_seed(options.scene.seed, s, trial));
      } catch (...) {
        failures[t] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(tasks));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  SweepTable table;
  for (std::size_t s = 0; s < slopes.size(); ++s) {
    std::vector<const std::vector<double>*> ovpc, ovpc_all, pca;
    for (std::size_t t = 0; t < trials; ++t) {
      ovpc.push_back(&results[s * trials + t].ovpc);
      ovpc_all.push_back(&results[s * trials + t].ovpc_all);
      pca.push_back(&results[s * trials + t].pca);
    }
    SweepRow row_ovpc{slopes[s], "ovpc"};
    summarize(ovpc, row_ovpc.mean_error_deg, row_ovpc.std_error_deg, row_ovpc.n_points);
    double unused_std = 0.0;
    summarize(ovpc_all, row_ovpc.mean_error_all_deg, unused_std, row_ovpc.n_points_all);
    SweepRow row_pca{slopes[s], "pca"};
    summarize(pca, row_pca.mean_error_deg, row_pca.std_error_deg, row_pca.n_points);
    table.rows.push_back(row_ovpc);
    table.rows.push_back(row_pca);
  }
  return table;
}

void write_sweep_csv(std::ostream& os, const SweepTable& table) {
  os << "slope_deg,method,mean_error_deg,std_error_deg,n_points\n";
  for (const auto& row : table.rows) {
    os << std::defaultfloat << std::setprecision(10) << row.slope_deg << ',' << row.method << ','
       << std::fixed << std::setprecision(6) << row.mean_error_deg << ',' << row.std_error_deg
       << ',' << row.n_points << '\n';
  }
  os << std::defaultfloat;
}

}  // namespace ovpc
