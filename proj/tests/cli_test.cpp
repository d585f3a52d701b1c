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

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "ovpc/bench.hpp"
#include "ovpc/io.hpp"
#include "support/oracles.hpp"

namespace ovpc {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ovpc_cli_" + std::string(
                              ::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    std::mt19937_64 rng(3);
    PointCloud sphere;
    sphere.points = oracle::shell_points(rng, 300, Point3::Zero(), 5.0, 5.0);
    write_cloud(dir_ / "sphere.xyz", sphere);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }
  std::string p(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

std::string slurp(const fs::path& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

TEST_F(Cli, MeshOnSphere) {
  ASSERT_EQ(run({"mesh", "--in", p("sphere.xyz"), "--viewpoint", "0,0,0", "--gamma", "-0.03",
                 "--out", p("m.ply")}),
            kExitOk)
      << err_.str();
  const MeshFile m = read_mesh(p("m.ply"));
  const TopologyReport t = mesh_topology_check(m.mesh);
  EXPECT_TRUE(t.is_closed);
  EXPECT_EQ(t.euler_characteristic, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({"mesh", "--in", p("sphere.xyz"), "--out", p("m.ply")}), kExitUsage);
  EXPECT_FALSE(err_.str().empty());
  EXPECT_EQ(run({"mesh", "--in", p("sphere.xyz"), "--viewpoint", "0,0,0", "--out", p("m.ply"),
                 "--frobnicate", "1"}),
            kExitUsage);
  EXPECT_NE(err_.str().find("frobnicate"), std::string::npos);
  EXPECT_EQ(run({}), kExitUsage);
  EXPECT_EQ(run({"teleport"}), kExitUsage);
  EXPECT_EQ(run({"query", "--navmap", p("n.ply")}), kExitUsage);
  EXPECT_EQ(run({"--help"}), kExitOk);
}

TEST_F(Cli, DataAndGeometryErrors) {
  std::ofstream(dir_ / "bad.xyz") << "# x y z\n1 2\n";
  EXPECT_EQ(run({"mesh", "--in", p("bad.xyz"), "--viewpoint", "0,0,0", "--out", p("m.ply")}),
            kExitData);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos);
  EXPECT_EQ(run({"mesh", "--in", p("nope.xyz"), "--viewpoint", "0,0,0", "--out", p("m.ply")}),
            kExitData);
  EXPECT_EQ(run({"mesh", "--in", p("sphere.xyz"), "--viewpoint", "0,0", "--out", p("m.ply")}),
            kExitData);
  std::ofstream(dir_ / "line.xyz") << "# x y z\n1 0 0\n2 0 0\n3 0 0\n4 0 0\n";
  EXPECT_EQ(run({"mesh", "--in", p("line.xyz"), "--viewpoint", "0,0,0", "--out", p("m.ply")}),
            kExitGeometry);
  EXPECT_EQ(run({"mesh", "--in", p("sphere.xyz"), "--viewpoint", "0,0,0", "--gamma", "0.5",
                 "--out", p("m.ply")}),
            kExitGeometry);
}

TEST_F(Cli, NavmapAndQueries) {
  ASSERT_EQ(run({"navmap", "--in", p("sphere.xyz"), "--viewpoint", "0,0,0", "--out", p("n.ply"),
                 "--mesh-out", p("m.ply"), "--alpha-max-deg", "40", "--dh-max", "0.5"}),
            kExitOk)
      << err_.str();
  EXPECT_TRUE(fs::exists(dir_ / "m.ply"));
  const NavMap map = read_navmap(p("n.ply"));

  ASSERT_EQ(run({"query", "--navmap", p("n.ply"), "--nearest", "0,0,-5"}), kExitOk);
  const Index want = oracle::linear_nearest(map.points(), Point3(0, 0, -5));
  EXPECT_NE(out_.str().find("index: " + std::to_string(want) + "\n"), std::string::npos);

  ASSERT_EQ(run({"query", "--navmap", p("n.ply"), "--project", "0,0,45,-5"}), kExitOk);
  EXPECT_NE(out_.str().find("orientation_wxyz:"), std::string::npos);

  ASSERT_EQ(run({"query", "--navmap", p("n.ply"), "--collide", "0,0,-5,1,0,0,0", "20,20,20,-10"}),
            kExitOk);
  std::size_t non_trav = 0;
  for (bool t : map.traversable()) non_trav += !t;
  EXPECT_NE(out_.str().find(non_trav ? "in_collision: 1" : "in_collision: 0"), std::string::npos);

  EXPECT_EQ(run({"query", "--navmap", p("n.ply"), "--nearest", "0,0,0", "--project", "0,0,0,0"}),
            kExitUsage);
}

TEST_F(Cli, SynthEvalCountingContract) {
  ASSERT_EQ(run({"synth-eval", "--slope-min", "0", "--slope-max", "0", "--step", "1", "--trials",
                 "1", "--seed", "4", "--out", p("s.csv")}),
            kExitOk)
      << err_.str();
  const std::string csv = slurp(dir_ / "s.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv.rfind("slope_deg,method,mean_error_deg,std_error_deg,n_points\n", 0), 0u);
  ASSERT_EQ(run({"synth-eval", "--slope-min", "0", "--slope-max", "0", "--step", "1", "--trials",
                 "1", "--seed", "4", "--out", p("s2.csv")}),
            kExitOk);
  EXPECT_EQ(csv, slurp(dir_ / "s2.csv"));
}

TEST_F(Cli, GenAndBench) {
  ASSERT_EQ(run({"gen-bench-clouds", "--out-dir", p("clouds"), "--sizes", "800", "--count", "2"}),
            kExitOk);
  ASSERT_EQ(run({"bench", "--in", p("clouds"), "--iterations", "2", "--out", p("b.csv")}),
            kExitOk)
      << err_.str();
  const std::string csv = slurp(dir_ / "b.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_NE(out_.str().find("mean_ms:"), std::string::npos);
}

TEST_F(Cli, PipelineWritesFramesAndEffectiveConfig) {
  fs::create_directories(dir_ / "scans");
  const PointCloud world = make_bench_cloud(4000, 8);
  std::ofstream poses(dir_ / "poses.csv");
  poses << "timestamp,x,y,z,qw,qx,qy,qz\n";
  for (int k = 0; k < 3; ++k) {
    const Pose3 pose = Pose3::from_normalized(Vec3(0.3 * k, 0.1 * k, 0),
                                              Eigen::Quaterniond(Eigen::AngleAxisd(0.05 * k, kUp)));
    write_cloud(dir_ / "scans" / ("scan_" + std::to_string(k) + ".xyz"),
                transform_cloud(world, pose.inverse()));
    poses << 0.1 * k << ',' << pose.translation.x() << ',' << pose.translation.y() << ','
          << pose.translation.z() << ',' << std::setprecision(17) << pose.rotation.w() << ','
          << pose.rotation.x() << ',' << pose.rotation.y() << ',' << pose.rotation.z() << '\n';
  }
  poses.close();
  std::ofstream(dir_ / "run.cfg") << "gamma = -0.02\nbuffer_capacity = 2\nseed = 5\n";

  ASSERT_EQ(run({"pipeline", "--scans", p("scans"), "--poses", p("poses.csv"), "--config",
                 p("run.cfg"), "--out-dir", p("out"), "--gamma", "-0.03"}),
            kExitOk)
      << err_.str();
  for (int k = 0; k < 3; ++k) {
    EXPECT_TRUE(fs::exists(dir_ / "out" / ("frame_000" + std::to_string(k) + "_navmap.ply")));
    EXPECT_TRUE(fs::exists(dir_ / "out" / ("frame_000" + std::to_string(k) + "_mesh.ply")));
  }
  const RunConfig eff = read_config(dir_ / "out" / "effective_config.txt");
  EXPECT_EQ(eff.gamma, -0.03);  // flag beats file
  EXPECT_EQ(eff.buffer_capacity, 2u);
  EXPECT_EQ(eff.seed, 5u);
  const std::string frames = slurp(dir_ / "out" / "frames.csv");
  EXPECT_EQ(std::count(frames.begin(), frames.end(), '\n'), 4);
  EXPECT_NE(frames.find("\n2,0.2,2,"), std::string::npos);  // capacity caps the buffer

  const MeshFile last = read_mesh(dir_ / "out" / "frame_0002_mesh.ply");
  EXPECT_TRUE(mesh_topology_check(last.mesh).is_closed);

  // a mismatched pose count is a data error
  std::ofstream(dir_ / "short.csv") << "0,0,0,0,1,0,0,0\n";
  EXPECT_EQ(run({"pipeline", "--scans", p("scans"), "--poses", p("short.csv"), "--out-dir",
                 p("out2")}),
            kExitData);
}

}  // namespace
}  // namespace ovpc
