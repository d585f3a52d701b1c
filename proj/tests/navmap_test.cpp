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

#include <cmath>
#include <numbers>
#include <random>

#include "ovpc/errors.hpp"
#include "ovpc/navmap.hpp"
#include "support/oracles.hpp"

namespace ovpc {
namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

NavMap flat_map(int n, double spacing) {
  std::vector<Point3> pts;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pts.emplace_back(i * spacing, j * spacing, 0);
  return NavMap(pts, std::vector<Vec3>(pts.size(), kUp), std::vector<bool>(pts.size(), true),
                Point3(0, 0, 1.88));
}

TEST(Heading, Normalization) {
  EXPECT_DOUBLE_EQ(normalize_heading(std::numbers::pi), std::numbers::pi);
  EXPECT_DOUBLE_EQ(normalize_heading(-std::numbers::pi), std::numbers::pi);
  EXPECT_NEAR(normalize_heading(3 * std::numbers::pi / 2), -std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(normalize_heading(0.25 + 8 * std::numbers::pi), 0.25, 1e-12);
  EXPECT_NEAR(Se2State::make(0, 0, -7).heading, -7 + 2 * std::numbers::pi, 1e-12);
}

TEST(Nearest, ExactHitAndTieBreak) {
  std::vector<Point3> pts{{0, 0, 0}, {5, 5, 5}, {9, 9, 9}, {1, 0, 0},
                          {4, 4, 4}, {7, 7, 7}, {8, 8, 8}, {-1, 0, 0}};
  NavMap m(pts, std::vector<Vec3>(8, kUp), std::vector<bool>(8, true), Point3::Zero());
  const auto hit = nearest_visible(m, Point3(5, 5, 5));
  EXPECT_EQ(hit.index, 1u);
  EXPECT_EQ(hit.distance, 0.0);
  EXPECT_EQ(nearest_visible(m, Point3(0, 0, 0)).index, 0u);
  // with point 0 moved away the origin is equidistant from 3 and 7
  std::vector<Point3> tie = pts;
  tie[0] = {50, 50, 50};
  NavMap m2(tie, std::vector<Vec3>(8, kUp), std::vector<bool>(8, true), Point3::Zero());
  EXPECT_EQ(nearest_visible(m2, Point3(0, 0, 0)).index, 3u);
}

TEST(Nearest, EmptyMapIsStateError) {
  EXPECT_THROW(nearest_visible(NavMap(), Point3::Zero()), StateError);
}

TEST(Nearest, RandomAgainstLinearScan) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-10, 10);
  std::vector<Point3> pts;
  for (int i = 0; i < 1500; ++i) pts.emplace_back(u(rng), u(rng), 0.2 * u(rng));
  NavMap m(pts, std::vector<Vec3>(pts.size(), kUp), std::vector<bool>(pts.size(), true),
           Point3::Zero());
  for (int q = 0; q < 1000; ++q) {
    const Point3 p(u(rng), u(rng), u(rng));
    EXPECT_EQ(nearest_visible(m, p).index, oracle::linear_nearest(pts, p));
  }
}

TEST(Project, FlatGroundYaw) {
  const NavMap m = flat_map(20, 0.2);
  const Pose3 p = project_state(m, Se2State::make(1, 2, 30 * kDeg), 0);
  EXPECT_LT((p.translation - Point3(1, 2, 0)).norm(), 1e-12);
  const Eigen::Matrix3d r = p.rotation_matrix();
  EXPECT_LT((r.col(2) - kUp).norm(), 1e-12);
  EXPECT_NEAR(std::atan2(r(1, 0), r(0, 0)), 30 * kDeg, 1e-12);
}

TEST(Project, InclineBodyPitch) {
  const double s = 10 * kDeg;
  const Vec3 n(-std::sin(s), 0, std::cos(s));
  std::vector<Point3> pts;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) pts.emplace_back(i * std::cos(s), j, i * std::sin(s));
  NavMap m(pts, std::vector<Vec3>(pts.size(), n), std::vector<bool>(pts.size(), true),
           Point3::Zero());
  const Pose3 p = project_state(m, Se2State::make(3, 3, 0), 0.5);
  const Eigen::Matrix3d r = p.rotation_matrix();
  EXPECT_NEAR(r(2, 0), std::sin(s), 1e-6);
  // numeric orthonormalization of the same construction
  Vec3 x = Vec3::UnitX() - Vec3::UnitX().dot(n) * n;
  x.normalize();
  EXPECT_LT((r.col(0) - x).norm(), 1e-9);
}

TEST(Project, AxesOrthonormal) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Point3> pts;
  std::vector<Vec3> normals;
  for (int i = 0; i < 500; ++i) {
    pts.emplace_back(5 * u(rng), 5 * u(rng), 0.3 * u(rng));
    normals.push_back(Vec3(0.4 * u(rng), 0.4 * u(rng), 1).normalized());
  }
  NavMap m(pts, normals, std::vector<bool>(pts.size(), true), Point3::Zero());
  for (int k = 0; k < 1000; ++k) {
    const Pose3 p = project_state(m, Se2State::make(5 * u(rng), 5 * u(rng), 4 * u(rng)), u(rng));
    const Eigen::Matrix3d r = p.rotation_matrix();
    EXPECT_LT((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_NEAR(r.determinant(), 1.0, 1e-9);
  }
}

TEST(Project, VerticalNormalAlongHeadingIsDegenerate) {
  std::vector<Point3> pts{{0, 0, 0}};
  NavMap m(pts, {Vec3::UnitX()}, {false}, Point3::Zero());
  EXPECT_THROW(project_state(m, Se2State::make(0, 0, 0), 0), DegeneracyError);
}

TEST(Collision, TraversableNeverCollides) {
  const NavMap m = flat_map(10, 0.1);
  const RobotBox box{2, 2, 1, -0.5};
  const CollisionReport r = collision_check(m, Pose3::identity(), box);
  EXPECT_FALSE(r.in_collision);
}

TEST(Collision, CenterAndJustOutside) {
  std::vector<Point3> pts{{0, 0, 0.5}, {0.5 + 1e-3, 0, 0.5}, {0, 0, 0.1}};
  NavMap m(pts, std::vector<Vec3>(3, kUp), {false, false, true}, Point3::Zero());
  const RobotBox box{1.0, 0.6, 1.0, 0.0};
  const CollisionReport r = collision_check(m, Pose3::identity(), box);
  EXPECT_TRUE(r.in_collision);
  EXPECT_EQ(r.offending_indices, std::vector<Index>{0});
  EXPECT_EQ(r.offending_indices,
            oracle::linear_collisions(pts, m.traversable(), Pose3::identity(), box));
}

TEST(Collision, RotatedBoxMatchesOracleAndGrowsMonotonically) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Point3> pts;
  std::vector<bool> trav;
  for (int i = 0; i < 3000; ++i) {
    pts.emplace_back(5 * u(rng), 5 * u(rng), 1.5 * u(rng));
    trav.push_back(u(rng) > 0.3);
  }
  NavMap m(pts, std::vector<Vec3>(pts.size(), kUp), trav, Point3::Zero());
  for (int k = 0; k < 200; ++k) {
    const Pose3 pose = Pose3::from_normalized(Vec3(4 * u(rng), 4 * u(rng), u(rng)),
                                              oracle::random_rotation(rng));
    const RobotBox box{0.5 + std::abs(u(rng)), 0.3 + std::abs(u(rng)), 0.2 + std::abs(u(rng)),
                       0.5 * u(rng)};
    const CollisionReport r = collision_check(m, pose, box);
    EXPECT_EQ(r.offending_indices, oracle::linear_collisions(pts, trav, pose, box));
    RobotBox bigger = box;
    bigger.length += 0.2;
    bigger.width += 0.1;
    bigger.height += 0.1;
    bigger.z_offset -= 0.05;
    if (r.in_collision) {
      EXPECT_TRUE(collision_check(m, pose, bigger).in_collision);
    }
  }
}

TEST(Collision, InvalidInputs) {
  const NavMap m = flat_map(3, 1.0);
  EXPECT_THROW(collision_check(m, Pose3::identity(), RobotBox{0, 1, 1, 0}), DomainError);
  Pose3 bad;
  bad.rotation = Eigen::Quaterniond(0.5, 0, 0, 0);
  EXPECT_THROW(collision_check(m, bad, RobotBox{1, 1, 1, 0}), DomainError);
}

}  // namespace
}  // namespace ovpc
