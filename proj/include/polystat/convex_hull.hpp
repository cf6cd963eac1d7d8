#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polystat/geometry.hpp"
#include "polystat/polyhedron.hpp"

namespace polystat {

// Exact incremental convex hull for small point sets.  Returns nullopt on
// any degenerate configuration (coplanar seed, a point exactly on a hull
// face plane, duplicate points): callers that sample random input resample
// instead of handling near-degeneracy.  Accepted output is a triangulated
// hull in strict general position that passes validate.
inline std::optional<Polyhedron> convex_hull(const std::vector<Vec3>& points) {
  const std::size_t n = points.size();
  if (n < 4) return std::nullopt;

  // seed simplex: first four affinely independent points, scanned in order
  std::size_t i1 = 1;
  while (i1 < n && points[i1] == points[0]) ++i1;
  if (i1 >= n) return std::nullopt;
  std::size_t i2 = i1 + 1;
  while (i2 < n && cross(points[i1] - points[0], points[i2] - points[0]).is_zero()) ++i2;
  if (i2 >= n) return std::nullopt;
  std::size_t i3 = i2 + 1;
  while (i3 < n && orientation(points[0], points[i1], points[i2], points[i3]) == 0) ++i3;
  if (i3 >= n) return std::nullopt;

  struct Tri {
    std::array<std::size_t, 3> v;
    bool alive = true;
  };
  std::vector<Tri> tris;
  auto add_tri = [&](std::size_t a, std::size_t b, std::size_t c) {
    tris.push_back(Tri{{a, b, c}, true});
  };
  // orient the seed so every face sees the fourth point on its negative side
  {
    std::size_t a = 0, b = i1, c = i2, d = i3;
    if (orientation(points[a], points[b], points[c], points[d]) > 0) std::swap(b, c);
    add_tri(a, b, c);
    add_tri(a, c, d);
    add_tri(c, b, d);
    add_tri(b, a, d);
  }

  for (std::size_t q = 1; q < n; ++q) {
    if (q == i1 || q == i2 || q == i3) continue;
    std::vector<int> visible;
    bool degenerate = false;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (!tris[t].alive) continue;
      int s = orientation(points[tris[t].v[0]], points[tris[t].v[1]], points[tris[t].v[2]],
                          points[q]);
      if (s == 0) {
        degenerate = true;
        break;
      }
      if (s > 0) visible.push_back(static_cast<int>(t));
    }
    if (degenerate) return std::nullopt;
    if (visible.empty()) continue;  // strictly inside

    // horizon: directed edges of visible faces whose reverse borders a
    // surviving face
    std::map<std::pair<std::size_t, std::size_t>, bool> visible_edges;
    for (int t : visible)
      for (int k = 0; k < 3; ++k) {
        std::size_t a = tris[static_cast<std::size_t>(t)].v[static_cast<std::size_t>(k)];
        std::size_t b = tris[static_cast<std::size_t>(t)].v[static_cast<std::size_t>((k + 1) % 3)];
        visible_edges[{a, b}] = true;
      }
    for (int t : visible) tris[static_cast<std::size_t>(t)].alive = false;
    for (const auto& [edge, flag] : visible_edges) {
      (void)flag;
      if (visible_edges.count({edge.second, edge.first})) continue;  // interior to the cap
      add_tri(edge.first, edge.second, q);
    }
  }

  // compact to surviving faces and the vertices they use
  std::vector<int> remap(n, -1);
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;
  for (const Tri& t : tris) {
    if (!t.alive) continue;
    std::vector<int> cycle;
    for (std::size_t v : t.v) {
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(vertices.size());
        vertices.push_back(points[v]);
      }
      cycle.push_back(remap[v]);
    }
    faces.push_back(std::move(cycle));
  }

  Polyhedron hull(std::move(vertices), std::move(faces));
  if (!validate(hull).ok) return std::nullopt;
  return hull;
}

}  // namespace polystat
