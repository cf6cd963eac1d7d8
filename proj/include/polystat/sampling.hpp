#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "polystat/convex_hull.hpp"
#include "polystat/equilibria.hpp"
#include "polystat/errors.hpp"
#include "polystat/geometry.hpp"
#include "polystat/polyhedron.hpp"
#include "polystat/vertex_links.hpp"

namespace polystat {

// Deterministic seeded source of uniform integers.  The bounded draw uses
// threshold rejection, so results are identical on every platform (the
// standard distributions are not portable across library implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [lo, hi], unbiased
  long long uniform(long long lo, long long hi) {
    const std::uint64_t bound = static_cast<std::uint64_t>(hi - lo) + 1;
    if (bound == 0) return static_cast<long long>(next_u64());
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return lo + static_cast<long long>(r % bound);
    }
  }

  Vec3 point_in_cube(long long half_side) {
    return Vec3{Rat(uniform(-half_side, half_side)), Rat(uniform(-half_side, half_side)),
                Rat(uniform(-half_side, half_side))};
  }

 private:
  std::mt19937_64 gen_;
};

constexpr long long kTetrahedronCoordinateBound = 100000;
constexpr long long kDirectionCoordinateBound = 1000;

// Uniform integer-coordinate tetrahedron in the fixture-scale cube,
// resampled until the volume is nonzero and every face angle and dihedral
// classification is strict (no Right results anywhere).
inline Polyhedron random_tetrahedron(Rng& rng) {
  for (;;) {
    Vec3 a = rng.point_in_cube(kTetrahedronCoordinateBound);
    Vec3 b = rng.point_in_cube(kTetrahedronCoordinateBound);
    Vec3 c = rng.point_in_cube(kTetrahedronCoordinateBound);
    Vec3 d = rng.point_in_cube(kTetrahedronCoordinateBound);
    if (orientation(a, b, c, d) == 0) continue;
    Polyhedron t = tetrahedron(a, b, c, d);
    std::array<Vec3, 4> normals;
    for (int f = 0; f < 4; ++f) normals[static_cast<std::size_t>(f)] = t.face_plane(f).normal;
    bool strict = true;
    for (int e = 0; e < t.num_edges() && strict; ++e) {
      const Edge& edge = t.edge(e);
      if (dot(normals[static_cast<std::size_t>(edge.left_face)],
              normals[static_cast<std::size_t>(edge.right_face)])
              .is_zero())
        strict = false;
    }
    for (int apex = 0; apex < 4 && strict; ++apex)
      for (int u = 0; u < 4 && strict; ++u)
        for (int w = u + 1; w < 4 && strict; ++w) {
          if (u == apex || w == apex) continue;
          if (angle_sign(t.vertex(apex), t.vertex(u), t.vertex(w)) == AngleClass::Right)
            strict = false;
        }
    if (!strict) continue;
    return t;
  }
}

// Strict convex combination of the vertices with positive integer weights.
inline Vec3 random_interior_point(Rng& rng, const Polyhedron& p) {
  Rat total(0);
  Vec3 sum{Rat(0), Rat(0), Rat(0)};
  for (int v = 0; v < p.num_vertices(); ++v) {
    Rat w(rng.uniform(1, 1000));
    sum = sum + p.vertex(v) * w;
    total = total + w;
  }
  return sum * (Rat(1) / total);
}

// Random weighted convex polyhedron: hull of 6..20 cube points plus a
// random interior center, regenerated until the classification has no
// degeneracies.
inline WeightedPolyhedron random_weighted_polyhedron(Rng& rng) {
  for (;;) {
    long long count = rng.uniform(6, 20);
    std::vector<Vec3> points;
    points.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i)
      points.push_back(rng.point_in_cube(kTetrahedronCoordinateBound));
    std::optional<Polyhedron> hull = convex_hull(points);
    if (!hull) continue;
    Vec3 center = random_interior_point(rng, *hull);
    WeightedPolyhedron wp{std::move(*hull), center};
    if (!classify(wp).reliable()) continue;
    return wp;
  }
}

// Three directions from a common apex, resampled until every edge and
// angle classification of the spherical triangle they span is strict.
inline std::array<Vec3, 3> random_direction_triple(Rng& rng) {
  for (;;) {
    std::array<Vec3, 3> d{rng.point_in_cube(kDirectionCoordinateBound),
                          rng.point_in_cube(kDirectionCoordinateBound),
                          rng.point_in_cube(kDirectionCoordinateBound)};
    if (d[0].is_zero() || d[1].is_zero() || d[2].is_zero()) continue;
    if (cross(d[0], d[1]).is_zero() || cross(d[0], d[2]).is_zero() ||
        cross(d[1], d[2]).is_zero())
      continue;
    SphericalTriangleClass cls = classify_spherical_triangle(d[0], d[1], d[2]);
    if (cls.has_quarter_edge() || cls.has_right_angle()) continue;
    return d;
  }
}

}  // namespace polystat
