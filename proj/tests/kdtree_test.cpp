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

#include <random>

#include "ovpc/kdtree.hpp"
#include "support/oracles.hpp"

namespace ovpc {
namespace {

TEST(KdTree, EmptyTree) {
  std::vector<Point3> none;
  KdTree t(none);
  EXPECT_TRUE(t.radius_search(Point3::Zero(), 1.0).empty());
  EXPECT_TRUE(t.box_search(Point3::Constant(-1), Point3::Constant(1)).empty());
}

TEST(KdTree, NearestMatchesLinearScan) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  std::vector<Point3> pts;
  for (int i = 0; i < 3000; ++i) pts.emplace_back(u(rng), u(rng), u(rng) * 0.1);
  KdTree t(pts);
  for (int q = 0; q < 2000; ++q) {
    const Point3 p(u(rng), u(rng), u(rng));
    EXPECT_EQ(t.nearest(p).index, oracle::linear_nearest(pts, p));
  }
}

TEST(KdTree, TiesGoToLowestIndex) {
  // Grid with many duplicates and equidistant queries.
  std::vector<Point3> pts;
  for (int rep = 0; rep < 3; ++rep)
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) pts.emplace_back(i, j, 0);
  KdTree t(pts, 4);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      const Point3 q(i + 0.5, j + 0.5, 0);
      EXPECT_EQ(t.nearest(q).index, oracle::linear_nearest(pts, q));
      EXPECT_EQ(t.nearest(Point3(i, j, 0)).index, static_cast<Index>(i * 10 + j));
    }
  }
}

TEST(KdTree, RadiusAndBoxSearchMatchScan) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-5, 5);
  std::vector<Point3> pts;
  for (int i = 0; i < 2000; ++i) pts.emplace_back(u(rng), u(rng), u(rng));
  KdTree t(pts);
  for (int q = 0; q < 200; ++q) {
    const Point3 c(u(rng), u(rng), u(rng));
    const double r = 0.1 + std::abs(u(rng)) / 3;
    std::vector<Index> want;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if ((pts[i] - c).squaredNorm() <= r * r) want.push_back(static_cast<Index>(i));
    }
    EXPECT_EQ(t.radius_search(c, r), want);

    const Point3 lo = c - Point3::Constant(r), hi = c + Point3(r, 2 * r, 0.5 * r);
    std::vector<Index> box;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if ((pts[i].array() >= lo.array()).all() && (pts[i].array() <= hi.array()).all()) {
        box.push_back(static_cast<Index>(i));
      }
    }
    EXPECT_EQ(t.box_search(lo, hi), box);
  }
}

TEST(KdTree, CoincidentPoints) {
  std::vector<Point3> pts(50, Point3(1, 1, 1));
  KdTree t(pts, 2);
  EXPECT_EQ(t.nearest(Point3::Zero()).index, 0u);
  EXPECT_EQ(t.radius_search(Point3(1, 1, 1), 0.0).size(), 50u);
}

}  // namespace
}  // namespace ovpc
