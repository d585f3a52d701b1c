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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "ovpc/bench.hpp"
#include "ovpc/cloud_buffer.hpp"
#include "ovpc/errors.hpp"
#include "ovpc/eval.hpp"
#include "ovpc/ghpr.hpp"
#include "ovpc/io.hpp"
#include "ovpc/navmap.hpp"
#include "ovpc/traversability.hpp"

namespace ovpc {

namespace fs = std::filesystem;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

Point3 parse_point(const std::string& text) {
  const auto v = parse_number_list(text, 3);
  return {v[0], v[1], v[2]};
}

std::vector<fs::path> cloud_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw DataError("'" + dir.string() + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext == ".ply" || ext == ".xyz" || ext == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw DataError("no cloud files in '" + dir.string() + "'");
  return files;
}

std::ofstream open_csv(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw DataError("cannot open '" + path.string() + "' for writing");
  return os;
}

// Options shared by mesh and navmap.
struct MeshArgs {
  std::string in;
  std::string viewpoint;
  double gamma = -0.03;
  double alpha_max_deg = 30.0;
  double dh_max = 0.25;
  std::string out;

  GhprConfig ghpr() const {
    GhprConfig cfg;
    cfg.viewpoint = parse_point(viewpoint);
    cfg.gamma = gamma;
    return cfg;
  }
  TraversabilityConfig traversability() const {
    TraversabilityConfig cfg;
    cfg.alpha_max = alpha_max_deg * kDeg;
    cfg.dh_max = dh_max;
    return cfg;
  }
};

void add_mesh_args(CLI::App* cmd, MeshArgs& a) {
  cmd->add_option("--in", a.in, "input cloud (.ply, .xyz, .txt)")->required();
  cmd->add_option("--viewpoint", a.viewpoint, "sensor position X,Y,Z")->required();
  cmd->add_option("--gamma", a.gamma, "kernel exponent (negative)")->capture_default_str();
  cmd->add_option("--alpha-max-deg", a.alpha_max_deg, "max surface angle")->capture_default_str();
  cmd->add_option("--dh-max", a.dh_max, "max vertex height spread per face, meters")
      ->capture_default_str();
}

int cmd_mesh(const MeshArgs& a, std::ostream& out) {
  const PointCloud cloud = read_cloud(a.in);
  const GhprConfig ghpr = a.ghpr();
  const TraversabilityConfig trav = a.traversability();
  trav.validate();
  const TriangleMesh mesh = build_ovpc_mesh(cloud, ghpr);
  const auto labels = face_labels(mesh, trav);
  write_mesh(a.out, mesh, labels);
  const TopologyReport topo = mesh_topology_check(mesh);
  out << "points: " << cloud.size() << "\nvertices: " << mesh.vertex_count()
      << "\nfaces: " << mesh.face_count() << "\nclosed: " << (topo.is_closed ? "yes" : "no")
      << "\neuler: " << topo.euler_characteristic << "\n";
  return kExitOk;
}

int cmd_navmap(const MeshArgs& a, const std::string& mesh_out, std::ostream& out) {
  const PointCloud cloud = read_cloud(a.in);
  const GhprConfig ghpr = a.ghpr();
  const TraversabilityConfig trav = a.traversability();
  trav.validate();
  const TriangleMesh mesh = build_ovpc_mesh(cloud, ghpr);
  const auto labels = face_labels(mesh, trav);
  const NavMap map = build_navmap(mesh, trav, ghpr.viewpoint);
  write_navmap(a.out, map);
  if (!mesh_out.empty()) write_mesh(mesh_out, mesh, labels);
  const auto n_trav = std::count(map.traversable().begin(), map.traversable().end(), true);
  out << "points: " << cloud.size() << "\nnavmap_points: " << map.size()
      << "\ntraversable: " << n_trav << "\n";
  return kExitOk;
}

struct PipelineArgs {
  std::string scans;
  std::string poses;
  std::string config;
  std::string out_dir;
  std::optional<double> gamma;
  std::optional<double> alpha_max_deg;
  std::optional<double> dh_max;
  std::optional<double> voxel_size;
  std::optional<std::size_t> min_points_per_voxel;
  std::optional<std::size_t> buffer_capacity;
  std::optional<std::string> viewpoint;
  std::optional<std::uint64_t> seed;
};

int cmd_pipeline(const PipelineArgs& a, std::ostream& out) {
  RunConfig cfg = a.config.empty() ? RunConfig{} : read_config(a.config);
  // Flags win over the file.
  if (a.gamma) cfg.gamma = *a.gamma;
  if (a.alpha_max_deg) cfg.alpha_max_deg = *a.alpha_max_deg;
  if (a.dh_max) cfg.dh_max = *a.dh_max;
  if (a.voxel_size) cfg.voxel_size = *a.voxel_size;
  if (a.min_points_per_voxel) cfg.min_points_per_voxel = *a.min_points_per_voxel;
  if (a.buffer_capacity) cfg.buffer_capacity = *a.buffer_capacity;
  if (a.viewpoint) cfg.viewpoint = parse_point(*a.viewpoint);
  if (a.seed) cfg.seed = *a.seed;
  cfg.validate();

  const auto files = cloud_files(a.scans);
  const auto poses = read_poses(a.poses);
  if (poses.size() != files.size()) {
    throw DataError("poses file has " + std::to_string(poses.size()) + " rows but there are " +
                    std::to_string(files.size()) + " scans");
  }

  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  {
    std::ofstream os = open_csv(dir / "effective_config.txt");
    format_config(os, cfg);
  }

  GhprConfig ghpr;
  ghpr.gamma = cfg.gamma;
  ghpr.viewpoint = cfg.viewpoint;  // sensor frame; scans are assembled into it
  TraversabilityConfig trav;
  trav.alpha_max = cfg.alpha_max_deg * kDeg;
  trav.dh_max = cfg.dh_max;
  BufferConfig buf;
  buf.capacity = cfg.buffer_capacity;
  buf.voxel_size = cfg.voxel_size;
  buf.min_points_per_voxel = cfg.min_points_per_voxel;
  ghpr.validate();
  trav.validate();
  buf.validate();

  CloudBuffer buffer(buf.capacity);
  std::ofstream frames = open_csv(dir / "frames.csv");
  frames << "frame,timestamp,scans,bundled_points,vertices,faces,traversable\n";
  frames << std::setprecision(9);
  for (std::size_t k = 0; k < files.size(); ++k) {
    buffer.push_scan({read_cloud(files[k]), poses[k].pose, poses[k].timestamp});
    const PointCloud bundled = buffer.assemble(poses[k].pose, buf);
    TriangleMesh mesh;
    try {
      mesh = build_ovpc_mesh(bundled, ghpr);
    } catch (const GeometryError& e) {
      throw GeometryError("frame " + std::to_string(k) + " (" + files[k].filename().string() +
                          "): " + e.what());
    }
    const auto labels = face_labels(mesh, trav);
    const NavMap map = build_navmap(mesh, trav, ghpr.viewpoint);
    char stem[32];
    std::snprintf(stem, sizeof stem, "frame_%04zu", k);
    write_mesh(dir / (std::string(stem) + "_mesh.ply"), mesh, labels);
    write_navmap(dir / (std::string(stem) + "_navmap.ply"), map);
    const auto n_trav = std::count(map.traversable().begin(), map.traversable().end(), true);
    frames << k << ',' << poses[k].timestamp << ',' << buffer.size() << ',' << bundled.size()
           << ',' << mesh.vertex_count() << ',' << mesh.face_count() << ',' << n_trav << '\n';
  }
  out << "frames: " << files.size() << "\nout_dir: " << a.out_dir << "\n";
  return kExitOk;
}

struct QueryArgs {
  std::string navmap;
  std::string nearest;
  std::string project;
  std::vector<std::string> collide;
};

int cmd_query(const QueryArgs& a, std::ostream& out) {
  const NavMap map = read_navmap(a.navmap);
  out << std::setprecision(9);
  if (!a.nearest.empty()) {
    const NearestVisible n = nearest_visible(map, parse_point(a.nearest));
    out << "index: " << n.index << "\npoint: " << n.point.x() << ',' << n.point.y() << ','
        << n.point.z() << "\nnormal: " << n.normal.x() << ',' << n.normal.y() << ','
        << n.normal.z() << "\ntraversable: " << (n.traversable ? 1 : 0)
        << "\ndistance: " << n.distance << "\n";
  } else if (!a.project.empty()) {
    const auto v = parse_number_list(a.project, 4);
    const Pose3 p = project_state(map, Se2State::make(v[0], v[1], v[2] * kDeg), v[3]);
    out << "position: " << p.translation.x() << ',' << p.translation.y() << ','
        << p.translation.z() << "\norientation_wxyz: " << p.rotation.w() << ','
        << p.rotation.x() << ',' << p.rotation.y() << ',' << p.rotation.z() << "\n";
  } else {
    const auto pv = parse_number_list(a.collide.at(0), 7);
    const auto bv = parse_number_list(a.collide.at(1), 4);
    const Eigen::Quaterniond q(pv[3], pv[4], pv[5], pv[6]);
    if (q.norm() < 1e-12) throw DataError("zero quaternion in pose");
    const Pose3 pose = Pose3::from_normalized(Vec3(pv[0], pv[1], pv[2]), q);
    const RobotBox box{bv[0], bv[1], bv[2], bv[3]};
    const CollisionReport r = collision_check(map, pose, box);
    out << "in_collision: " << (r.in_collision ? 1 : 0) << "\noffending:";
    for (Index i : r.offending_indices) out << ' ' << i;
    out << "\n";
  }
  return kExitOk;
}

struct SynthArgs {
  double slope_min = 0.0;
  double slope_max = 35.0;
  double step = 1.0;
  int trials = 3;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out;
};

int cmd_synth_eval(const SynthArgs& a, std::ostream& out) {
  SweepOptions opt;
  opt.slope_min = a.slope_min;
  opt.slope_max = a.slope_max;
  opt.step = a.step;
  opt.trials = a.trials;
  opt.scene.seed = a.seed;
  opt.threads = a.threads;
  const SweepTable table = run_normal_sweep(opt);
  std::ofstream os = open_csv(a.out);
  write_sweep_csv(os, table);
  os.flush();
  if (!os) throw DataError("write to '" + a.out + "' failed");

  double all_sum = 0.0;
  std::size_t all_n = 0;
  for (const auto& r : table.rows) {
    if (r.method != "ovpc") continue;
    all_sum += r.mean_error_all_deg * static_cast<double>(r.n_points_all);
    all_n += r.n_points_all;
  }
  const ErrorSummary o = overall(table, "ovpc");
  const ErrorSummary p = overall(table, "pca");
  out << std::fixed << std::setprecision(3) << "ovpc_mean_deg: " << o.mean
      << "\novpc_std_deg: " << o.std << "\novpc_points: " << o.n << "\npca_mean_deg: " << p.mean
      << "\npca_std_deg: " << p.std << "\npca_points: " << p.n
      << "\novpc_mean_all_vertices_deg: " << (all_n ? all_sum / all_n : 0.0) << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::string in;
  int iterations = 10;
  std::string out;
  std::string viewpoint = "0,0,0";
  double gamma = -0.03;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  std::vector<PointCloud> clouds;
  for (const auto& f : cloud_files(a.in)) clouds.push_back(read_cloud(f));
  GhprConfig ghpr;
  ghpr.viewpoint = parse_point(a.viewpoint);
  ghpr.gamma = a.gamma;
  const BenchStats stats = time_pipeline(clouds, ghpr, TraversabilityConfig{}, a.iterations);
  std::ofstream os = open_csv(a.out);
  write_bench_csv(os, stats);
  out << bench_summary(stats);
  return kExitOk;
}

struct GenBenchArgs {
  std::string out_dir;
  std::string sizes = "5000,10000,20000";
  int count = 5;
  std::uint64_t seed = 0;
};

int cmd_gen_bench(const GenBenchArgs& a, std::ostream& out) {
  std::string s = a.sizes;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream ss(s);
  std::vector<std::size_t> sizes;
  for (std::size_t n; ss >> n;) sizes.push_back(n);
  if (sizes.empty() || !ss.eof()) throw DataError("bad --sizes list '" + a.sizes + "'");
  if (a.count < 1) throw DataError("--count must be at least 1");
  fs::create_directories(a.out_dir);
  std::size_t written = 0;
  for (std::size_t n : sizes) {
    for (int k = 0; k < a.count; ++k) {
      char name[64];
      std::snprintf(name, sizeof name, "cloud_%06zu_%02d.xyz", n, k);
      write_cloud(fs::path(a.out_dir) / name, make_bench_cloud(n, a.seed * 1000003ULL + n + k));
      ++written;
    }
  }
  out << "clouds: " << written << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Watertight visibility meshes and traversability maps from point clouds", "ovpc"};
  app.require_subcommand(1);

  MeshArgs mesh_args;
  auto* mesh = app.add_subcommand("mesh", "build the visibility mesh of one cloud");
  add_mesh_args(mesh, mesh_args);
  mesh->add_option("--out", mesh_args.out, "output mesh (.ply)")->required();

  MeshArgs nav_args;
  std::string nav_mesh_out;
  auto* navmap = app.add_subcommand("navmap", "build the classified point map of one cloud");
  add_mesh_args(navmap, nav_args);
  navmap->add_option("--out", nav_args.out, "output navmap (.ply)")->required();
  navmap->add_option("--mesh-out", nav_mesh_out, "also write the labelled mesh");

  PipelineArgs pipe_args;
  auto* pipeline = app.add_subcommand("pipeline", "buffer, assemble, mesh and classify scans");
  pipeline->add_option("--scans", pipe_args.scans, "directory of scans, sorted by name")
      ->required();
  pipeline->add_option("--poses", pipe_args.poses, "CSV timestamp,x,y,z,qw,qx,qy,qz")->required();
  pipeline->add_option("--config", pipe_args.config, "key = value run configuration");
  pipeline->add_option("--out-dir", pipe_args.out_dir, "output directory")->required();
  pipeline->add_option("--gamma", pipe_args.gamma);
  pipeline->add_option("--alpha-max-deg", pipe_args.alpha_max_deg);
  pipeline->add_option("--dh-max", pipe_args.dh_max);
  pipeline->add_option("--voxel-size", pipe_args.voxel_size);
  pipeline->add_option("--min-points-per-voxel", pipe_args.min_points_per_voxel);
  pipeline->add_option("--buffer-capacity", pipe_args.buffer_capacity);
  pipeline->add_option("--viewpoint", pipe_args.viewpoint, "sensor origin in the scan frame");
  pipeline->add_option("--seed", pipe_args.seed);

  QueryArgs query_args;
  auto* query = app.add_subcommand("query", "query a navmap file");
  query->add_option("--navmap", query_args.navmap, "navmap (.ply)")->required();
  auto* q_near = query->add_option("--nearest", query_args.nearest, "X,Y,Z");
  auto* q_proj = query->add_option("--project", query_args.project, "X,Y,THETA_DEG,ZREF");
  auto* q_coll = query->add_option("--collide", query_args.collide,
                                   "POSE BOX: x,y,z,qw,qx,qy,qz length,width,height,z_offset")
                     ->expected(2);
  q_near->excludes(q_proj)->excludes(q_coll);
  q_proj->excludes(q_coll);

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth-eval", "normal accuracy sweep on synthetic inclines");
  synth->add_option("--slope-min", synth_args.slope_min)->capture_default_str();
  synth->add_option("--slope-max", synth_args.slope_max)->capture_default_str();
  synth->add_option("--step", synth_args.step)->capture_default_str();
  synth->add_option("--trials", synth_args.trials)->capture_default_str();
  synth->add_option("--seed", synth_args.seed)->capture_default_str();
  synth->add_option("--threads", synth_args.threads, "0 = all cores")->capture_default_str();
  synth->add_option("--out", synth_args.out, "output CSV")->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time mesh + navmap over a directory of clouds");
  bench->add_option("--in", bench_args.in, "directory of clouds")->required();
  bench->add_option("--iterations", bench_args.iterations)->capture_default_str();
  bench->add_option("--out", bench_args.out, "per-sample CSV")->required();
  bench->add_option("--viewpoint", bench_args.viewpoint)->capture_default_str();
  bench->add_option("--gamma", bench_args.gamma)->capture_default_str();

  GenBenchArgs gen_args;
  auto* gen = app.add_subcommand("gen-bench-clouds", "write synthetic clouds for bench");
  gen->add_option("--out-dir", gen_args.out_dir)->required();
  gen->add_option("--sizes", gen_args.sizes)->capture_default_str();
  gen->add_option("--count", gen_args.count, "clouds per size")->capture_default_str();
  gen->add_option("--seed", gen_args.seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (query->parsed() && !*q_near && !*q_proj && !*q_coll) {
      throw CLI::RequiredError("one of --nearest, --project, --collide");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mesh->parsed()) return cmd_mesh(mesh_args, out);
    if (navmap->parsed()) return cmd_navmap(nav_args, nav_mesh_out, out);
    if (pipeline->parsed()) return cmd_pipeline(pipe_args, out);
    if (query->parsed()) return cmd_query(query_args, out);
    if (synth->parsed()) return cmd_synth_eval(synth_args, out);
    if (bench->parsed()) return cmd_bench(bench_args, out);
    if (gen->parsed()) return cmd_gen_bench(gen_args, out);
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitGeometry;
  }
  return kExitUsage;
}

}  // namespace ovpc
