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

#include "ovpc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ovpc/errors.hpp"

namespace ovpc {

namespace {

constexpr int kDigits = 9;

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::optional<double> to_double(const std::string& tok) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

double finite_number(const std::string& tok, std::size_t line) {
  const auto v = to_double(tok);
  if (!v) throw ParseError("not a number: '" + tok + "'", line);
  if (!std::isfinite(*v)) throw ParseError("non-finite value: '" + tok + "'", line);
  return *v;
}

long long integer(const std::string& tok, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("not an integer: '" + tok + "'", line);
  }
  return v;
}

std::string lower_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw DataError("cannot open '" + path.string() + "' for reading");
  return is;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw DataError("cannot open '" + path.string() + "' for writing");
  os.imbue(std::locale::classic());
  return os;
}

void finish(std::ofstream& os, const std::filesystem::path& path) {
  os.flush();
  if (!os) throw DataError("write to '" + path.string() + "' failed");
}

// Minimal ASCII PLY reader: header, then whitespace-separated records.

struct PlyProperty {
  std::string name;
  bool is_list = false;
};

struct PlyElement {
  std::string name;
  std::size_t count = 0;
  std::vector<PlyProperty> props;
  int find(const std::string& prop) const {
    for (std::size_t i = 0; i < props.size(); ++i) {
      if (props[i].name == prop) return static_cast<int>(i);
    }
    return -1;
  }
};

struct PlyRecord {
  std::vector<double> scalars;               // one per non-list property
  std::vector<std::vector<long long>> lists;  // one per list property
  std::size_t line = 0;
};

struct PlyData {
  std::vector<PlyElement> elements;
  std::vector<std::string> comments;
  std::vector<std::vector<PlyRecord>> records;  // parallel to elements
  const PlyElement* element(const std::string& name, std::size_t* at = nullptr) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i].name == name) {
        if (at) *at = i;
        return &elements[i];
      }
    }
    return nullptr;
  }
};

PlyData parse_ply(std::istream& is) {
  PlyData ply;
  std::string line;
  std::size_t ln = 0;
  if (!std::getline(is, line)) throw DataError("empty file");
  ++ln;
  if (trim(line) != "ply") throw ParseError("missing 'ply' magic", ln);
  bool saw_format = false;
  bool saw_end = false;
  while (std::getline(is, line)) {
    ++ln;
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "format") {
      if (tok.size() < 2 || tok[1] != "ascii") {
        throw ParseError("only ASCII PLY is supported", ln);
      }
      saw_format = true;
    } else if (tok[0] == "comment" || tok[0] == "obj_info") {
      const auto pos = line.find(tok[0]) + tok[0].size();
      ply.comments.push_back(trim(line.substr(pos)));
    } else if (tok[0] == "element") {
      if (tok.size() != 3) throw ParseError("malformed element line", ln);
      const long long n = integer(tok[2], ln);
      if (n < 0) throw ParseError("negative element count", ln);
      ply.elements.push_back({tok[1], static_cast<std::size_t>(n), {}});
    } else if (tok[0] == "property") {
      if (ply.elements.empty()) throw ParseError("property before any element", ln);
      if (tok.size() == 3) {
        ply.elements.back().props.push_back({tok[2], false});
      } else if (tok.size() == 5 && tok[1] == "list") {
        ply.elements.back().props.push_back({tok[4], true});
      } else {
        throw ParseError("malformed property line", ln);
      }
    } else if (tok[0] == "end_header") {
      saw_end = true;
      break;
    } else {
      throw ParseError("unknown header keyword '" + tok[0] + "'", ln);
    }
  }
  if (!saw_format) throw ParseError("missing format line", ln);
  if (!saw_end) throw ParseError("missing end_header", ln);

  ply.records.resize(ply.elements.size());
  for (std::size_t e = 0; e < ply.elements.size(); ++e) {
    const PlyElement& el = ply.elements[e];
    auto& recs = ply.records[e];
    recs.reserve(el.count);
    while (recs.size() < el.count) {
      if (!std::getline(is, line)) {
        throw ParseError("expected " + std::to_string(el.count) + " '" + el.name +
                             "' records, found " + std::to_string(recs.size()),
                         ln);
      }
      ++ln;
      const auto tok = split_ws(line);
      if (tok.empty()) continue;
      PlyRecord rec;
      rec.line = ln;
      std::size_t t = 0;
      for (const auto& prop : el.props) {
        if (t >= tok.size()) throw ParseError("too few values for '" + el.name + "'", ln);
        if (!prop.is_list) {
          rec.scalars.push_back(finite_number(tok[t++], ln));
          continue;
        }
        const long long n = integer(tok[t++], ln);
        if (n < 0 || t + static_cast<std::size_t>(n) > tok.size()) {
          throw ParseError("bad list length", ln);
        }
        std::vector<long long> list;
        for (long long k = 0; k < n; ++k) list.push_back(integer(tok[t++], ln));
        rec.lists.push_back(std::move(list));
      }
      if (t != tok.size()) throw ParseError("too many values for '" + el.name + "'", ln);
      recs.push_back(std::move(rec));
    }
  }
  return ply;
}

// Index of a scalar property among the element's non-list properties.
int scalar_slot(const PlyElement& el, const std::string& name) {
  int slot = 0;
  for (const auto& p : el.props) {
    if (p.name == name) return p.is_list ? -1 : slot;
    if (!p.is_list) ++slot;
  }
  return -1;
}

int list_slot(const PlyElement& el) {
  int slot = 0;
  for (const auto& p : el.props) {
    if (p.is_list) {
      if (p.name == "vertex_indices" || p.name == "vertex_index") return slot;
      ++slot;
    }
  }
  return -1;
}

struct VertexSlots {
  int x, y, z;
};

VertexSlots xyz_slots(const PlyElement& el) {
  const VertexSlots s{scalar_slot(el, "x"), scalar_slot(el, "y"), scalar_slot(el, "z")};
  if (s.x < 0 || s.y < 0 || s.z < 0) throw DataError("vertex element lacks x, y or z");
  return s;
}

bool flag(double v, std::size_t line) {
  if (v == 0.0) return false;
  if (v == 1.0) return true;
  throw ParseError("traversable must be 0 or 1", line);
}

void write_vertex_header(std::ostream& os, std::size_t n) {
  os << "element vertex " << n << "\n"
     << "property double x\nproperty double y\nproperty double z\n"
     << "property double nx\nproperty double ny\nproperty double nz\n"
     << "property uchar traversable\n";
}

void write_vertex(std::ostream& os, const Point3& p, const Vec3& n, bool traversable) {
  os << p.x() << ' ' << p.y() << ' ' << p.z() << ' ' << n.x() << ' ' << n.y() << ' ' << n.z()
     << ' ' << (traversable ? 1 : 0) << '\n';
}

struct OrientedVertices {
  std::vector<Point3> points;
  std::vector<Vec3> normals;
  std::vector<bool> traversable;
  std::vector<std::string> comments;
  PlyData ply;
};

OrientedVertices parse_oriented_vertices(std::istream& is) {
  OrientedVertices out;
  out.ply = parse_ply(is);
  std::size_t at = 0;
  const PlyElement* v = out.ply.element("vertex", &at);
  if (!v) throw DataError("file has no vertex element");
  const VertexSlots s = xyz_slots(*v);
  const int nx = scalar_slot(*v, "nx"), ny = scalar_slot(*v, "ny"), nz = scalar_slot(*v, "nz");
  const int tr = scalar_slot(*v, "traversable");
  if (nx < 0 || ny < 0 || nz < 0 || tr < 0) {
    throw DataError("vertex element lacks normals or traversable flag");
  }
  for (const auto& r : out.ply.records[at]) {
    out.points.emplace_back(r.scalars[s.x], r.scalars[s.y], r.scalars[s.z]);
    out.normals.emplace_back(r.scalars[nx], r.scalars[ny], r.scalars[nz]);
    out.traversable.push_back(flag(r.scalars[tr], r.line));
  }
  out.comments = out.ply.comments;
  return out;
}

}  // namespace

// ---------------------------------------------------------------- clouds

PointCloud parse_xyz(std::istream& is) {
  std::string line;
  std::size_t ln = 0;
  std::size_t columns = 0;
  PointCloud cloud;
  while (std::getline(is, line)) {
    ++ln;
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (columns == 0) {
      // Header: "# x y z" or "# x y z intensity".
      if (tok[0] != "#") throw ParseError("expected header '# x y z [intensity]'", ln);
      const std::vector<std::string> names(tok.begin() + 1, tok.end());
      if (names == std::vector<std::string>{"x", "y", "z"}) {
        columns = 3;
      } else if (names == std::vector<std::string>{"x", "y", "z", "intensity"}) {
        columns = 4;
      } else {
        throw ParseError("malformed header", ln);
      }
      continue;
    }
    if (tok[0].front() == '#') continue;
    if (tok.size() != columns) {
      throw ParseError("expected " + std::to_string(columns) + " columns, found " +
                           std::to_string(tok.size()),
                       ln);
    }
    cloud.points.emplace_back(finite_number(tok[0], ln), finite_number(tok[1], ln),
                              finite_number(tok[2], ln));
    if (columns == 4) cloud.intensity.push_back(finite_number(tok[3], ln));
  }
  if (cloud.empty()) throw DataError("empty cloud");
  return cloud;
}

void format_xyz(std::ostream& os, const PointCloud& cloud) {
  cloud.validate();
  os << std::setprecision(kDigits);
  os << (cloud.has_intensity() ? "# x y z intensity\n" : "# x y z\n");
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Point3& p = cloud.points[i];
    os << p.x() << ' ' << p.y() << ' ' << p.z();
    if (cloud.has_intensity()) os << ' ' << cloud.intensity[i];
    os << '\n';
  }
}

PointCloud parse_cloud_ply(std::istream& is) {
  const PlyData ply = parse_ply(is);
  std::size_t at = 0;
  const PlyElement* v = ply.element("vertex", &at);
  if (!v) throw DataError("file has no vertex element");
  const VertexSlots s = xyz_slots(*v);
  const int in = scalar_slot(*v, "intensity");
  PointCloud cloud;
  for (const auto& r : ply.records[at]) {
    cloud.points.emplace_back(r.scalars[s.x], r.scalars[s.y], r.scalars[s.z]);
    if (in >= 0) cloud.intensity.push_back(r.scalars[in]);
  }
  if (cloud.empty()) throw DataError("empty cloud");
  return cloud;
}

void format_cloud_ply(std::ostream& os, const PointCloud& cloud) {
  cloud.validate();
  os << std::setprecision(kDigits);
  os << "ply\nformat ascii 1.0\nelement vertex " << cloud.size() << "\n"
     << "property double x\nproperty double y\nproperty double z\n";
  if (cloud.has_intensity()) os << "property float intensity\n";
  os << "end_header\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Point3& p = cloud.points[i];
    os << p.x() << ' ' << p.y() << ' ' << p.z();
    if (cloud.has_intensity()) os << ' ' << cloud.intensity[i];
    os << '\n';
  }
}

PointCloud read_cloud(const std::filesystem::path& path) {
  const std::string ext = lower_extension(path);
  if (ext != ".ply" && ext != ".xyz" && ext != ".txt") {
    throw DataError("unrecognized cloud extension '" + ext + "'");
  }
  std::ifstream is = open_in(path);
  try {
    return ext == ".ply" ? parse_cloud_ply(is) : parse_xyz(is);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void write_cloud(const std::filesystem::path& path, const PointCloud& cloud) {
  const std::string ext = lower_extension(path);
  if (ext != ".ply" && ext != ".xyz" && ext != ".txt") {
    throw DataError("unrecognized cloud extension '" + ext + "'");
  }
  std::ofstream os = open_out(path);
  if (ext == ".ply") {
    format_cloud_ply(os, cloud);
  } else {
    format_xyz(os, cloud);
  }
  finish(os, path);
}

// ---------------------------------------------------------------- meshes

void format_mesh(std::ostream& os, const TriangleMesh& mesh, std::span<const FaceLabel> labels) {
  if (labels.size() != mesh.face_count()) {
    throw StructuralError("mesh has " + std::to_string(mesh.face_count()) + " faces but " +
                          std::to_string(labels.size()) + " labels");
  }
  const VertexAttributes attrs = vertex_attributes(mesh, labels);
  os << std::setprecision(kDigits);
  os << "ply\nformat ascii 1.0\n";
  write_vertex_header(os, mesh.vertex_count());
  os << "element face " << mesh.face_count() << "\n"
     << "property list uchar int vertex_indices\nproperty uchar traversable\nend_header\n";
  for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
    write_vertex(os, mesh.vertices[v], attrs.normals[v], attrs.traversable[v]);
  }
  for (std::size_t f = 0; f < mesh.face_count(); ++f) {
    const Face& face = mesh.faces[f];
    os << "3 " << face[0] << ' ' << face[1] << ' ' << face[2] << ' '
       << (labels[f].traversable ? 1 : 0) << '\n';
  }
}

void write_mesh(const std::filesystem::path& path, const TriangleMesh& mesh,
                std::span<const FaceLabel> labels) {
  std::ostringstream buf;  // nothing touches disk if validation fails
  buf.imbue(std::locale::classic());
  format_mesh(buf, mesh, labels);
  std::ofstream os = open_out(path);
  os << buf.str();
  finish(os, path);
}

MeshFile parse_mesh(std::istream& is) {
  OrientedVertices v = parse_oriented_vertices(is);
  MeshFile out;
  out.mesh.vertices = std::move(v.points);
  out.vertex_normals = std::move(v.normals);
  out.vertex_traversable = std::move(v.traversable);
  std::size_t at = 0;
  const PlyElement* f = v.ply.element("face", &at);
  if (!f) return out;
  const int list = list_slot(*f);
  const int tr = scalar_slot(*f, "traversable");
  if (list < 0) throw DataError("face element lacks vertex_indices");
  const long long nv = static_cast<long long>(out.mesh.vertex_count());
  for (const auto& r : v.ply.records[at]) {
    const auto& idx = r.lists[list];
    if (idx.size() != 3) throw ParseError("only triangles are supported", r.line);
    Face face;
    for (int k = 0; k < 3; ++k) {
      if (idx[k] < 0 || idx[k] >= nv) throw ParseError("face index out of range", r.line);
      face[k] = static_cast<Index>(idx[k]);
    }
    out.mesh.faces.push_back(face);
    out.mesh.face_normals.push_back(triangle_normal(
        out.mesh.vertices[face[0]], out.mesh.vertices[face[1]], out.mesh.vertices[face[2]]));
    out.face_traversable.push_back(tr >= 0 && flag(r.scalars[tr], r.line));
  }
  return out;
}

MeshFile read_mesh(const std::filesystem::path& path) {
  std::ifstream is = open_in(path);
  try {
    return parse_mesh(is);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------- navmaps

void format_navmap(std::ostream& os, const NavMap& map) {
  os << std::setprecision(kDigits);
  const Point3& vp = map.viewpoint();
  os << "ply\nformat ascii 1.0\n"
     << "comment viewpoint " << vp.x() << ' ' << vp.y() << ' ' << vp.z() << "\n";
  write_vertex_header(os, map.size());
  os << "element face 0\nproperty list uchar int vertex_indices\nend_header\n";
  for (std::size_t i = 0; i < map.size(); ++i) {
    write_vertex(os, map.points()[i], map.normals()[i], map.traversable()[i]);
  }
}

void write_navmap(const std::filesystem::path& path, const NavMap& map) {
  std::ofstream os = open_out(path);
  format_navmap(os, map);
  finish(os, path);
}

NavMap parse_navmap(std::istream& is) {
  OrientedVertices v = parse_oriented_vertices(is);
  Point3 viewpoint = Point3::Zero();
  for (const auto& c : v.comments) {
    const auto tok = split_ws(c);
    if (tok.size() == 4 && tok[0] == "viewpoint") {
      viewpoint = {finite_number(tok[1], 0), finite_number(tok[2], 0), finite_number(tok[3], 0)};
    }
  }
  if (v.points.empty()) throw DataError("navmap has no points");
  for (std::size_t i = 0; i < v.normals.size(); ++i) {
    if (std::abs(v.normals[i].norm() - 1.0) > 1e-6) {
      throw DataError("navmap normal " + std::to_string(i) + " is not unit length");
    }
  }
  return NavMap(std::move(v.points), std::move(v.normals), std::move(v.traversable), viewpoint);
}

NavMap read_navmap(const std::filesystem::path& path) {
  std::ifstream is = open_in(path);
  try {
    return parse_navmap(is);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------- poses

std::vector<StampedPose> parse_poses(std::istream& is) {
  std::vector<StampedPose> poses;
  std::string line;
  std::size_t ln = 0;
  bool first = true;
  while (std::getline(is, line)) {
    ++ln;
    if (trim(line).empty()) continue;
    std::vector<std::string> tok;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) tok.push_back(trim(cell));
    if (first && !tok.empty() && !to_double(tok[0])) {
      first = false;
      if (tok != std::vector<std::string>{"timestamp", "x", "y", "z", "qw", "qx", "qy", "qz"}) {
        throw ParseError("expected header timestamp,x,y,z,qw,qx,qy,qz", ln);
      }
      continue;
    }
    first = false;
    if (tok.size() != 8) {
      throw ParseError("expected 8 columns, found " + std::to_string(tok.size()), ln);
    }
    double v[8];
    for (int k = 0; k < 8; ++k) v[k] = finite_number(tok[k], ln);
    const Eigen::Quaterniond q(v[4], v[5], v[6], v[7]);
    if (q.norm() < 1e-12) throw ParseError("zero quaternion", ln);
    poses.push_back({v[0], Pose3::from_normalized(Vec3(v[1], v[2], v[3]), q)});
  }
  return poses;
}

std::vector<StampedPose> read_poses(const std::filesystem::path& path) {
  std::ifstream is = open_in(path);
  try {
    return parse_poses(is);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------- config

std::vector<double> parse_number_list(const std::string& text, std::size_t count) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  const auto tok = split_ws(s);
  if (tok.size() != count) {
    throw DataError("expected " + std::to_string(count) + " numbers in '" + text + "'");
  }
  std::vector<double> out;
  for (const auto& t : tok) {
    const auto v = to_double(t);
    if (!v || !std::isfinite(*v)) throw DataError("not a finite number: '" + t + "' in '" + text + "'");
    out.push_back(*v);
  }
  return out;
}

void RunConfig::validate() const {
  if (!(gamma < 0.0)) throw DataError("gamma must be negative");
  if (!(alpha_max_deg > 0.0 && alpha_max_deg <= 90.0)) {
    throw DataError("alpha_max_deg must lie in (0, 90]");
  }
  if (!(dh_max > 0.0)) throw DataError("dh_max must be positive");
  if (!(voxel_size > 0.0)) throw DataError("voxel_size must be positive");
  if (min_points_per_voxel < 1) throw DataError("min_points_per_voxel must be at least 1");
  if (buffer_capacity < 1) throw DataError("buffer_capacity must be at least 1");
  if (!viewpoint.allFinite()) throw DataError("viewpoint must be finite");
}

void RunConfig::set(const std::string& key, const std::string& value, std::size_t line) {
  auto real = [&] { return finite_number(value, line); };
  auto count = [&] {
    const long long v = integer(value, line);
    if (v < 0) throw ParseError(key + " must be non-negative", line);
    return static_cast<std::size_t>(v);
  };
  if (key == "gamma") {
    gamma = real();
  } else if (key == "alpha_max_deg") {
    alpha_max_deg = real();
  } else if (key == "dh_max") {
    dh_max = real();
  } else if (key == "voxel_size") {
    voxel_size = real();
  } else if (key == "min_points_per_voxel") {
    min_points_per_voxel = count();
  } else if (key == "buffer_capacity") {
    buffer_capacity = count();
  } else if (key == "viewpoint") {
    try {
      const auto v = parse_number_list(value, 3);
      viewpoint = {v[0], v[1], v[2]};
    } catch (const DataError& e) {
      throw ParseError(e.what(), line);
    }
  } else if (key == "seed") {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw ParseError("seed must be an unsigned integer", line);
    }
    seed = v;
  } else {
    throw ParseError("unknown key '" + key + "'", line);
  }
}

RunConfig parse_config(std::istream& is) {
  RunConfig cfg;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", ln);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError("expected 'key = value'", ln);
    cfg.set(key, value, ln);
  }
  return cfg;
}

RunConfig read_config(const std::filesystem::path& path) {
  std::ifstream is = open_in(path);
  try {
    return parse_config(is);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void format_config(std::ostream& os, const RunConfig& cfg) {
  os << std::setprecision(17);
  os << "gamma = " << cfg.gamma << "\n"
     << "alpha_max_deg = " << cfg.alpha_max_deg << "\n"
     << "dh_max = " << cfg.dh_max << "\n"
     << "voxel_size = " << cfg.voxel_size << "\n"
     << "min_points_per_voxel = " << cfg.min_points_per_voxel << "\n"
     << "buffer_capacity = " << cfg.buffer_capacity << "\n"
     << "viewpoint = " << cfg.viewpoint.x() << "," << cfg.viewpoint.y() << ","
     << cfg.viewpoint.z() << "\n"
     << "seed = " << cfg.seed << "\n";
}

}  // namespace ovpc
