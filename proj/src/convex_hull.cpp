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

#include "ovpc/convex_hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "ovpc/errors.hpp"

namespace ovpc {
namespace {

constexpr std::int32_t kNone = -1;

struct HullFace {
  std::array<Index, 3> v;
  // adj[k] is the face across edge v[k] -> v[(k + 1) % 3].
  std::array<std::int32_t, 3> adj{kNone, kNone, kNone};
  Vec3 normal = Vec3::Zero();
  double offset = 0.0;
  std::vector<Index> outside;
  std::vector<Index> coplanar;
  Index furthest = 0;
  double furthest_distance = -std::numeric_limits<double>::infinity();
  std::uint32_t visit = 0;
  bool alive = true;
  bool visible = false;
};

struct HorizonEdge {
  Index from;
  Index to;
  std::int32_t outer;  // surviving face across the edge
};

class QuickHull {
 public:
  QuickHull(std::span<const Point3> input, double eps) : eps_(eps) {
    Eigen::AlignedBox3d box;
    for (const auto& p : input) box.extend(p);
    const Vec3 center = box.center();
    pts_.reserve(input.size());
    for (const auto& p : input) pts_.push_back(p - center);
  }

  void run();
  HullMesh result(std::span<const Point3> input) const;

 private:
  double distance(const HullFace& f, Index i) const { return f.normal.dot(pts_[i]) - f.offset; }

  std::int32_t add_face(Index a, Index b, Index c);
  void build_simplex();
  void link(std::int32_t f, int slot, std::int32_t g);
  int slot_of_edge(const HullFace& f, Index from, Index to) const;
  void classify(Index p, std::span<const std::int32_t> candidates,
                std::span<const std::int32_t> fallback);
  void add_point(std::int32_t start_face);
  bool collect_horizon(std::vector<std::int32_t>& visible, std::vector<HorizonEdge>& horizon);

  std::vector<Point3> pts_;
  double eps_;
  std::vector<HullFace> faces_;
  std::vector<std::int32_t> pending_;
  std::uint32_t stamp_ = 0;
};

std::int32_t QuickHull::add_face(Index a, Index b, Index c) {
  HullFace f;
  f.v = {a, b, c};
  f.normal = triangle_normal(pts_[a], pts_[b], pts_[c]);
  if (f.normal.isZero()) {
    throw DegeneracyError("convex hull produced a zero-area face (numerical breakdown)", 2);
  }
  f.offset = f.normal.dot((pts_[a] + pts_[b] + pts_[c]) / 3.0);
  faces_.push_back(std::move(f));
  return static_cast<std::int32_t>(faces_.size() - 1);
}

void QuickHull::link(std::int32_t f, int slot, std::int32_t g) { faces_[f].adj[slot] = g; }

int QuickHull::slot_of_edge(const HullFace& f, Index from, Index to) const {
  for (int k = 0; k < 3; ++k) {
    if (f.v[k] == from && f.v[(k + 1) % 3] == to) return k;
  }
  return -1;
}

void QuickHull::build_simplex() {
  const std::size_t n = pts_.size();
  std::array<Index, 6> extremes{};
  for (int axis = 0; axis < 3; ++axis) {
    Index lo = 0;
    Index hi = 0;
    for (Index i = 1; i < n; ++i) {
      if (pts_[i][axis] < pts_[lo][axis]) lo = i;
      if (pts_[i][axis] > pts_[hi][axis]) hi = i;
    }
    extremes[2 * axis] = lo;
    extremes[2 * axis + 1] = hi;
  }

  // Most distant pair among the extremes.
  Index a = extremes[0];
  Index b = extremes[1];
  double best = -1.0;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      const double d = (pts_[extremes[i]] - pts_[extremes[j]]).squaredNorm();
      if (d > best) {
        best = d;
        a = std::min(extremes[i], extremes[j]);
        b = std::max(extremes[i], extremes[j]);
      }
    }
  }
  if (std::sqrt(best) <= eps_) {
    throw DegeneracyError("degenerate hull input: all points coincide (dimension 0)", 0);
  }

  const Vec3 axis_dir = (pts_[b] - pts_[a]).normalized();
  Index c = 0;
  best = -1.0;
  for (Index i = 0; i < n; ++i) {
    const Vec3 d = pts_[i] - pts_[a];
    const double off = (d - d.dot(axis_dir) * axis_dir).squaredNorm();
    if (off > best) {
      best = off;
      c = i;
    }
  }
  if (std::sqrt(best) <= eps_) {
    throw DegeneracyError("degenerate hull input: points are collinear (dimension 1)", 1);
  }

  const Vec3 plane_n = (pts_[b] - pts_[a]).cross(pts_[c] - pts_[a]).normalized();
  Index d = 0;
  best = -1.0;
  for (Index i = 0; i < n; ++i) {
    const double off = std::abs(plane_n.dot(pts_[i] - pts_[a]));
    if (off > best) {
      best = off;
      d = i;
    }
  }
  if (best <= eps_) {
    throw DegeneracyError("degenerate hull input: points are coplanar (dimension 2)", 2);
  }

  // Orient so that d lies below face (a, b, c).
  if (plane_n.dot(pts_[d] - pts_[a]) > 0.0) std::swap(b, c);
  const std::int32_t f0 = add_face(a, b, c);
  const std::int32_t f1 = add_face(a, d, b);
  const std::int32_t f2 = add_face(b, d, c);
  const std::int32_t f3 = add_face(c, d, a);
  // f0 edges: a->b, b->c, c->a
  faces_[f0].adj = {f1, f2, f3};
  // f1 edges: a->d, d->b, b->a
  faces_[f1].adj = {f3, f2, f0};
  // f2 edges: b->d, d->c, c->b
  faces_[f2].adj = {f1, f3, f0};
  // f3 edges: c->d, d->a, a->c
  faces_[f3].adj = {f2, f1, f0};

  const std::array<std::int32_t, 4> all{f0, f1, f2, f3};
  for (Index i = 0; i < n; ++i) {
    if (i == a || i == b || i == c || i == d) continue;
    classify(i, all, {});
  }
  for (auto f : all) {
    if (!faces_[f].outside.empty()) pending_.push_back(f);
  }
}

// Assigns p to the outside list of the face it is furthest above, to a
// coplanar list when it is within eps of the boundary, or drops it.
void QuickHull::classify(Index p, std::span<const std::int32_t> candidates,
                         std::span<const std::int32_t> fallback) {
  std::int32_t best_face = kNone;
  double best = -std::numeric_limits<double>::infinity();
  for (auto f : candidates) {
    const double d = distance(faces_[f], p);
    if (d > best) {
      best = d;
      best_face = f;
    }
  }
  if (best <= eps_) {
    for (auto f : fallback) {
      const double d = distance(faces_[f], p);
      if (d > best) {
        best = d;
        best_face = f;
      }
    }
  }
  if (best_face == kNone) return;
  if (best > eps_) {
    HullFace& f = faces_[best_face];
    f.outside.push_back(p);
    if (best > f.furthest_distance || (best == f.furthest_distance && p < f.furthest)) {
      f.furthest_distance = best;
      f.furthest = p;
    }
  } else if (best >= -eps_) {
    faces_[best_face].coplanar.push_back(p);
  }
}

bool QuickHull::collect_horizon(std::vector<std::int32_t>& visible,
                                std::vector<HorizonEdge>& horizon) {
  horizon.clear();
  for (auto f : visible) {
    const HullFace& face = faces_[f];
    for (int k = 0; k < 3; ++k) {
      const std::int32_t g = face.adj[k];
      if (!faces_[g].visible) horizon.push_back({face.v[k], face.v[(k + 1) % 3], g});
    }
  }
  if (horizon.size() < 3) return false;

  // The horizon must be one simple cycle: every vertex starts exactly one edge
  // and chaining from any edge visits all of them.
  std::unordered_map<Index, std::size_t> by_start;
  by_start.reserve(horizon.size() * 2);
  for (std::size_t e = 0; e < horizon.size(); ++e) {
    if (!by_start.emplace(horizon[e].from, e).second) return false;
  }
  std::vector<HorizonEdge> ordered;
  ordered.reserve(horizon.size());
  std::size_t e = 0;
  for (std::size_t step = 0; step < horizon.size(); ++step) {
    ordered.push_back(horizon[e]);
    auto it = by_start.find(horizon[e].to);
    if (it == by_start.end()) return false;
    e = it->second;
    if (e == 0 && step + 1 < horizon.size()) return false;
  }
  if (e != 0) return false;
  horizon.swap(ordered);
  return true;
}

void QuickHull::add_point(std::int32_t start) {
  const Index eye = faces_[start].furthest;
  const Point3& ep = pts_[eye];

  // Flood the faces the eye sees.
  ++stamp_;
  std::vector<std::int32_t> visible{start};
  faces_[start].visible = true;
  faces_[start].visit = stamp_;
  for (std::size_t i = 0; i < visible.size(); ++i) {
    const HullFace& f = faces_[visible[i]];
    for (auto g : f.adj) {
      HullFace& nb = faces_[g];
      if (nb.visit == stamp_) continue;
      nb.visit = stamp_;
      if (nb.normal.dot(ep) - nb.offset > 0.0) {
        nb.visible = true;
        visible.push_back(g);
      }
    }
  }

  // Near-coplanar faces can leave the visible region with holes or pinched
  // vertices; absorb the nearly-flat neighbours until the horizon is simple.
  std::vector<HorizonEdge> horizon;
  int repairs = 0;
  while (!collect_horizon(visible, horizon)) {
    if (++repairs > 64) {
      for (auto f : visible) faces_[f].visible = false;
      throw DegeneracyError("convex hull horizon could not be repaired near point " +
                                std::to_string(eye),
                            2);
    }
    std::vector<std::int32_t> grow;
    for (auto f : visible) {
      for (auto g : faces_[f].adj) {
        HullFace& nb = faces_[g];
        if (nb.visible) continue;
        const double d = nb.normal.dot(ep) - nb.offset;
        const bool enclosed = faces_[nb.adj[0]].visible && faces_[nb.adj[1]].visible &&
                              faces_[nb.adj[2]].visible;
        if (enclosed || d > -eps_ * (1 << std::min(repairs, 20))) {
          nb.visible = true;
          grow.push_back(g);
        }
      }
    }
    if (grow.empty()) {
      for (auto f : visible) faces_[f].visible = false;
      throw DegeneracyError("convex hull horizon is not a simple cycle near point " +
                                std::to_string(eye),
                            2);
    }
    visible.insert(visible.end(), grow.begin(), grow.end());
  }

  // Vertices swallowed by the visible region leave the triangulation; they are
  // re-classified with the orphaned outside and coplanar points.
  std::vector<Index> orphans;
  {
    std::unordered_map<Index, bool> on_horizon;
    on_horizon.reserve(horizon.size() * 2);
    for (const auto& h : horizon) on_horizon[h.from] = true;
    for (auto f : visible) {
      for (auto v : faces_[f].v) {
        if (v != eye && !on_horizon.count(v)) {
          on_horizon[v] = false;
        }
      }
    }
    for (const auto& [v, kept] : on_horizon) {
      if (!kept) orphans.push_back(v);
    }
    std::sort(orphans.begin(), orphans.end());
  }

  // Cone of new faces around the eye, in horizon order.
  const std::size_t m = horizon.size();
  std::vector<std::int32_t> cone(m);
  for (std::size_t k = 0; k < m; ++k) cone[k] = add_face(horizon[k].from, horizon[k].to, eye);
  std::vector<std::int32_t> outer(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::int32_t f = cone[k];
    const HorizonEdge& h = horizon[k];
    link(f, 0, h.outer);
    link(f, 1, cone[(k + 1) % m]);
    link(f, 2, cone[(k + m - 1) % m]);
    const int slot = slot_of_edge(faces_[h.outer], h.to, h.from);
    link(h.outer, slot, f);
    outer[k] = h.outer;
  }
  std::sort(outer.begin(), outer.end());
  outer.erase(std::unique(outer.begin(), outer.end()), outer.end());

  for (auto f : visible) {
    HullFace& face = faces_[f];
    face.alive = false;
    face.visible = false;
    for (auto p : face.outside) {
      if (p != eye) classify(p, cone, outer);
    }
    for (auto p : face.coplanar) classify(p, cone, outer);
    std::vector<Index>().swap(face.outside);
    std::vector<Index>().swap(face.coplanar);
  }
  for (auto p : orphans) classify(p, cone, outer);

  for (auto f : outer) {
    if (!faces_[f].outside.empty()) pending_.push_back(f);
  }
  for (auto f : cone) {
    if (!faces_[f].outside.empty()) pending_.push_back(f);
  }
}

void QuickHull::run() {
  build_simplex();
  while (!pending_.empty()) {
    const std::int32_t f = pending_.back();
    pending_.pop_back();
    if (!faces_[f].alive || faces_[f].outside.empty()) continue;
    add_point(f);
  }
}

HullMesh QuickHull::result(std::span<const Point3> input) const {
  HullMesh out;
  out.epsilon = eps_;
  out.vertex_on_hull.assign(input.size(), false);

  std::vector<std::int32_t> remap(input.size(), kNone);
  for (const auto& f : faces_) {
    if (!f.alive) continue;
    for (auto v : f.v) remap[v] = 0;
    for (auto p : f.coplanar) out.vertex_on_hull[p] = true;
  }
  for (Index i = 0; i < input.size(); ++i) {
    if (remap[i] == kNone) continue;
    remap[i] = static_cast<std::int32_t>(out.mesh.vertices.size());
    out.mesh.vertices.push_back(input[i]);
    out.mesh.source_index.push_back(i);
    out.vertex_on_hull[i] = true;
  }
  for (const auto& f : faces_) {
    if (!f.alive) continue;
    out.mesh.faces.push_back({static_cast<Index>(remap[f.v[0]]), static_cast<Index>(remap[f.v[1]]),
                              static_cast<Index>(remap[f.v[2]])});
    out.mesh.face_normals.push_back(f.normal);
  }
  return out;
}

}  // namespace

HullMesh quickhull3(std::span<const Point3> points, const HullConfig& config) {
  if (!(config.epsilon_scale > 0.0)) throw DomainError("epsilon_scale must be positive");
  if (points.size() < 4) {
    throw SizeError("convex hull needs at least 4 points, got " + std::to_string(points.size()));
  }
  require_finite(points);
  double max_abs = 0.0;
  for (const auto& p : points) max_abs = std::max(max_abs, p.cwiseAbs().maxCoeff());
  const double eps = config.epsilon_scale * std::max(max_abs, std::numeric_limits<double>::min());

  QuickHull hull(points, eps);
  hull.run();
  return hull.result(points);
}

bool hull_contains(const HullMesh& hull, const Point3& q, double eps) {
  if (!mesh_topology_check(hull.mesh).is_closed) {
    throw StructuralError("hull_contains needs a closed hull");
  }
  const auto& m = hull.mesh;
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const Point3& a = m.vertices[m.faces[f][0]];
    if (m.face_normals[f].dot(q - a) > eps) return false;
  }
  return true;
}

}  // namespace ovpc
