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
#include <sstream>

#include "ovpc/bench.hpp"
#include "ovpc/errors.hpp"

namespace ovpc {
namespace {

TEST(Bench, SampleCountAndStatistics) {
  const std::vector<PointCloud> clouds{make_bench_cloud(2000, 1)};
  const BenchStats s = time_pipeline(clouds, GhprConfig{}, TraversabilityConfig{}, 5);
  ASSERT_EQ(s.samples.size(), 5u);
  // independent aggregation
  double sum = 0, lo = 1e300, hi = -1e300;
  for (const auto& x : s.samples) {
    sum += x.ms;
    lo = std::min(lo, x.ms);
    hi = std::max(hi, x.ms);
    EXPECT_EQ(x.points, 2000u);
  }
  const double mean = sum / 5;
  double var = 0;
  for (const auto& x : s.samples) var += (x.ms - mean) * (x.ms - mean);
  EXPECT_NEAR(s.mean, mean, 1e-9 * mean);
  EXPECT_NEAR(s.std, std::sqrt(var / 5), 1e-9 * std::max(1.0, s.std));
  EXPECT_EQ(s.min, lo);
  EXPECT_EQ(s.max, hi);
  std::size_t binned = 0;
  for (auto h : s.histogram) binned += h;
  EXPECT_EQ(binned, 5u);
}

TEST(Bench, CloudIsDeterministicAndSized) {
  const PointCloud a = make_bench_cloud(5000, 3);
  EXPECT_EQ(a.size(), 5000u);
  EXPECT_EQ(a.points, make_bench_cloud(5000, 3).points);
}

TEST(Bench, RepeatedMeshesIdentical) {
  const PointCloud c = make_bench_cloud(3000, 9);
  EXPECT_EQ(build_ovpc_mesh(c, GhprConfig{}).faces, build_ovpc_mesh(c, GhprConfig{}).faces);
}

TEST(Bench, FailureNamesCloud) {
  PointCloud flat;
  for (int i = 1; i < 10; ++i) flat.points.emplace_back(i, 0, 0);
  const std::vector<PointCloud> clouds{make_bench_cloud(500, 1), flat};
  try {
    time_pipeline(clouds, GhprConfig{}, TraversabilityConfig{}, 1);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_NE(std::string(e.what()).find("cloud 1"), std::string::npos);
  }
  EXPECT_THROW(time_pipeline(clouds, GhprConfig{}, TraversabilityConfig{}, 0), DomainError);
}

TEST(Bench, CsvHeader) {
  BenchStats s;
  s.samples.push_back({0, 10, 0, 1.25});
  std::ostringstream os;
  write_bench_csv(os, s);
  EXPECT_EQ(os.str(), "cloud_id,points,iteration,ms\n0,10,0,1.250000\n");
}

}  // namespace
}  // namespace ovpc
