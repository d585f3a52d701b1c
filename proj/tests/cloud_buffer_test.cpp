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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "ovpc/cloud_buffer.hpp"
#include "ovpc/errors.hpp"
#include "ovpc/eval.hpp"
#include "support/oracles.hpp"

namespace ovpc {
namespace {

Scan make_scan(double t, std::size_t n = 10) {
  Scan s;
  for (std::size_t i = 0; i < n; ++i) s.cloud.points.emplace_back(t, static_cast<double>(i), 0);
  s.timestamp = t;
  return s;
}

TEST(Buffer, RingEviction) {
  CloudBuffer b(25);
  for (int i = 0; i < 30; ++i) b.push_scan(make_scan(i));
  EXPECT_EQ(b.size(), 25u);
  const auto snap = b.snapshot();
  EXPECT_EQ(snap.front()->timestamp, 5.0);
  EXPECT_EQ(snap.back()->timestamp, 29.0);
}

TEST(Buffer, SinglePush) {
  CloudBuffer b(3);
  b.push_scan(make_scan(1));
  EXPECT_EQ(b.size(), 1u);
}

TEST(Buffer, OutOfOrderLeavesBufferUnchanged) {
  CloudBuffer b(3);
  b.push_scan(make_scan(1));
  b.push_scan(make_scan(2));
  EXPECT_THROW(b.push_scan(make_scan(1.5)), OrderingError);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b.snapshot().back()->timestamp, 2.0);
  b.push_scan(make_scan(2));  // equal timestamps are allowed
  EXPECT_EQ(b.size(), 3u);
}

TEST(Buffer, EmptyAssembleIsStateError) {
  CloudBuffer b(2);
  EXPECT_THROW(b.assemble(Pose3::identity(), BufferConfig{}), StateError);
}

TEST(Buffer, ConcurrentPushAndAssemble) {
  CloudBuffer b(8);
  BufferConfig cfg;
  cfg.min_points_per_voxel = 1;
  std::jthread writer([&] {
    for (int i = 0; i < 200; ++i) b.push_scan(make_scan(i, 50));
  });
  for (int i = 0; i < 100; ++i) {
    if (b.size() == 0) continue;
    const PointCloud c = b.assemble(Pose3::identity(), cfg);
    EXPECT_FALSE(c.empty());
  }
}

TEST(Voxel, TwoPointsOneCentroid) {
  PointCloud c;
  c.points = {{0.01, 0.02, 0.03}, {0.05, 0.06, 0.07}};
  c.intensity = {2, 4};
  const PointCloud out = voxel_filter(c, 0.2, 2);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_LT((out.points[0] - Point3(0.03, 0.04, 0.05)).norm(), 1e-15);
  EXPECT_DOUBLE_EQ(out.intensity[0], 3.0);
}

TEST(Voxel, IsolatedPointRemoved) {
  PointCloud c;
  c.points = {{0.01, 0.02, 0.03}};
  EXPECT_TRUE(voxel_filter(c, 0.2, 2).empty());
}

TEST(Voxel, CountMatchesHashOracleAndOrder) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-3, 3);
  PointCloud c;
  for (int i = 0; i < 10000; ++i) c.points.emplace_back(u(rng), u(rng), u(rng));
  const double vs = 0.37;
  std::map<std::array<long long, 3>, std::vector<Point3>> bins;
  for (const auto& p : c.points) {
    bins[{static_cast<long long>(std::floor(p.x() / vs)),
          static_cast<long long>(std::floor(p.y() / vs)),
          static_cast<long long>(std::floor(p.z() / vs))}]
        .push_back(p);
  }
  const PointCloud out = voxel_filter(c, vs, 1);
  ASSERT_EQ(out.size(), bins.size());
  std::size_t k = 0;
  for (const auto& [key, members] : bins) {
    // std::map iterates in lexicographic key order, which is the output order
    for (int a = 0; a < 3; ++a) {
      EXPECT_GE(out.points[k][a], key[a] * vs - 1e-12);
      EXPECT_LE(out.points[k][a], (key[a] + 1) * vs + 1e-12);
    }
    ++k;
  }
  const PointCloud strict = voxel_filter(c, vs, 3);
  EXPECT_LE(strict.size(), out.size());
  EXPECT_LE(out.size(), c.size());
}

TEST(Voxel, NegativeCoordinatesFloor) {
  EXPECT_EQ(voxel_key(Point3(-0.01, 0.0, 0.19), 0.2), (VoxelKey{-1, 0, 0}));
}

TEST(Assemble, IdentityTinyVoxelsKeepsEveryPoint) {
  CloudBuffer b(1);
  Scan s = make_scan(0, 40);
  b.push_scan(s);
  BufferConfig cfg;
  cfg.voxel_size = 1e-3;
  cfg.min_points_per_voxel = 1;
  const PointCloud out = b.assemble(Pose3::identity(), cfg);
  ASSERT_EQ(out.size(), 40u);
  for (const auto& p : out.points) {
    double best = 1e9;
    for (const auto& q : s.cloud.points) best = std::min(best, (p - q).norm());
    EXPECT_LT(best, 1e-12);
  }
}

TEST(Assemble, TwoViewsOfOnePlane) {
  // A plane z = 0.3 x seen from two poses; each scan stores it in its own frame.
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-4, 4);
  std::vector<Point3> world;
  for (int i = 0; i < 3000; ++i) {
    const double x = u(rng), y = u(rng);
    world.emplace_back(x, y, 0.3 * x);
  }
  CloudBuffer b(2);
  double t = 0;
  for (const Pose3& pose : {Pose3::from_normalized({1, 2, 0.5}, oracle::random_rotation(rng)),
                            Pose3::from_normalized({-1, 0, 0.2}, oracle::random_rotation(rng))}) {
    Scan s;
    s.pose = pose;
    s.timestamp = t++;
    for (const auto& p : world) s.cloud.points.push_back(pose.inverse().apply(p));
    b.push_scan(s);
  }
  BufferConfig cfg;
  cfg.min_points_per_voxel = 1;
  const PointCloud out = b.assemble(Pose3::identity(), cfg);
  // least-squares plane through the assembled points
  Eigen::MatrixXd a(out.size(), 3);
  Eigen::VectorXd z(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    a.row(i) << out.points[i].x(), out.points[i].y(), 1.0;
    z[i] = out.points[i].z();
  }
  const Eigen::Vector3d coef = a.colPivHouseholderQr().solve(z);
  const Vec3 n = Vec3(-coef[0], -coef[1], 1).normalized();
  double worst = 0;
  for (const auto& p : out.points) worst = std::max(worst, std::abs(n.dot(p) - coef[2] * n.z()));
  EXPECT_LE(worst, cfg.voxel_size);
  EXPECT_NEAR(coef[0], 0.3, 1e-3);
}

TEST(Assemble, SyntheticScansShrinkWithinBounds) {
  SceneSpec spec;
  spec.extent = 8;
  spec.scans = 1;
  CloudBuffer b(25);
  std::size_t raw = 0;
  std::set<std::array<long, 3>> cells;
  for (int k = 0; k < 25; ++k) {
    spec.seed = k;
    Scan s;
    s.cloud = gen_scene(spec).bundled_cloud;
    s.timestamp = k;
    raw += s.cloud.size();
    for (const auto& p : s.cloud.points) {
      cells.insert({static_cast<long>(std::floor(p.x() / 0.2)),
                    static_cast<long>(std::floor(p.y() / 0.2)),
                    static_cast<long>(std::floor(p.z() / 0.2))});
    }
    b.push_scan(std::move(s));
  }
  const PointCloud out = b.assemble(Pose3::identity(), BufferConfig{});
  // at most one point per occupied 0.2 m cell, and most cells hold two or more points
  EXPECT_LE(out.size(), cells.size());
  EXPECT_GE(out.size(), cells.size() / 2);
  EXPECT_LT(out.size(), raw);
  EXPECT_EQ(out.points, b.assemble(Pose3::identity(), BufferConfig{}).points);
}

TEST(BufferConfig, Validation) {
  BufferConfig c;
  c.voxel_size = 0;
  EXPECT_THROW(c.validate(), DomainError);
  EXPECT_THROW(CloudBuffer(0), DomainError);
}

}  // namespace
}  // namespace ovpc
