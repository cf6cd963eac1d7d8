#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "polystat/equilibria.hpp"
#include "polystat/errors.hpp"
#include "polystat/geometry.hpp"
#include "polystat/polyhedron.hpp"
#include "polystat/vertex_links.hpp"

namespace polystat {

// Ordered vertices (A,B,C,D) whose edges AB, BC, CD all carry obtuse
// dihedral angles.  The three edges share no vertex and cover all four.
struct ObtusePath {
  std::array<int, 4> vertices;

  friend bool operator==(const ObtusePath&, const ObtusePath&) = default;
};

// Ordered cycle A-B-C-D-A whose face angles at B, C and D (that is,
// angle ABC, angle BCD and angle CDA) are all obtuse.
struct ObtuseCycle {
  std::array<int, 4> vertices;

  friend bool operator==(const ObtuseCycle&, const ObtuseCycle&) = default;
};

// Tetrahedral region of interior points that load target_face as the one
// stable face.
struct LoadingRegion {
  std::array<Vec3, 4> corners;
  int target_face = -1;

  Vec3 centroid() const {
    return (corners[0] + corners[1] + corners[2] + corners[3]) * Rat(1, 4);
  }
};

namespace detail {

inline void require_tetrahedron(const Polyhedron& t) {
  if (!t.is_tetrahedron()) fail(Errc::not_a_tetrahedron, "tetrahedron required");
}

// For a tetrahedron, the face not containing vertex v.
inline int face_opposite(const Polyhedron& t, int v) {
  for (int f = 0; f < t.num_faces(); ++f)
    if (!t.face_contains(f, v)) return f;
  fail(Errc::not_a_tetrahedron, "no face opposite vertex");
}

}  // namespace detail

inline std::vector<ObtusePath> find_obtuse_paths(const Polyhedron& t) {
  detail::require_tetrahedron(t);
  std::array<std::array<bool, 4>, 4> obtuse{};
  for (int e = 0; e < t.num_edges(); ++e)
    if (dihedral_sign(t, e) == AngleClass::Obtuse) {
      const Edge& edge = t.edge(e);
      obtuse[static_cast<std::size_t>(edge.u)][static_cast<std::size_t>(edge.v)] = true;
      obtuse[static_cast<std::size_t>(edge.v)][static_cast<std::size_t>(edge.u)] = true;
    }
  std::vector<ObtusePath> out;
  std::array<int, 4> p{0, 1, 2, 3};
  // all 24 orderings, in lexicographic order
  do {
    if (obtuse[static_cast<std::size_t>(p[0])][static_cast<std::size_t>(p[1])] &&
        obtuse[static_cast<std::size_t>(p[1])][static_cast<std::size_t>(p[2])] &&
        obtuse[static_cast<std::size_t>(p[2])][static_cast<std::size_t>(p[3])])
      out.push_back(ObtusePath{p});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<ObtuseCycle> find_obtuse_cycles(const Polyhedron& t) {
  detail::require_tetrahedron(t);
  std::array<std::array<std::array<bool, 4>, 4>, 4> obtuse{};
  for (int apex = 0; apex < 4; ++apex)
    for (int u = 0; u < 4; ++u)
      for (int w = u + 1; w < 4; ++w) {
        if (u == apex || w == apex) continue;
        bool is_obtuse = face_angle_sign(t, apex, u, w) == AngleClass::Obtuse;
        obtuse[static_cast<std::size_t>(apex)][static_cast<std::size_t>(u)]
              [static_cast<std::size_t>(w)] = is_obtuse;
        obtuse[static_cast<std::size_t>(apex)][static_cast<std::size_t>(w)]
              [static_cast<std::size_t>(u)] = is_obtuse;
      }
  std::vector<ObtuseCycle> out;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    if (obtuse[static_cast<std::size_t>(p[1])][static_cast<std::size_t>(p[0])]
              [static_cast<std::size_t>(p[2])] &&
        obtuse[static_cast<std::size_t>(p[2])][static_cast<std::size_t>(p[1])]
              [static_cast<std::size_t>(p[3])] &&
        obtuse[static_cast<std::size_t>(p[3])][static_cast<std::size_t>(p[2])]
              [static_cast<std::size_t>(p[0])])
      out.push_back(ObtuseCycle{p});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace detail {

// One strict interior cut: the plane through (a, b) perpendicular to base,
// intersected with the open segment (c, d).
inline Vec3 perpendicular_cut(const Vec3& a, const Vec3& b, const Plane& base, const Vec3& c,
                              const Vec3& d) {
  Plane cut = plane_perpendicular_along(a, b, base);
  LinePlaneCut hit = intersect_line_plane(c, d, cut);
  if (hit.t <= Rat(0) || hit.t >= Rat(1))
    fail(Errc::degenerate_cut, "cut parameter " + hit.t.str() + " outside open segment");
  return hit.point;
}

// Runs the loading chain for path (A,B,C,D).  Returns the region for the
// face opposite B when want_opposite_first is false, and for the face
// opposite A when it is true.
inline LoadingRegion loading_chain(const Polyhedron& t, const ObtusePath& path,
                                   bool want_opposite_first) {
  const Vec3& a = t.vertex(path.vertices[0]);
  const Vec3& b = t.vertex(path.vertices[1]);
  const Vec3& c = t.vertex(path.vertices[2]);
  const Vec3& d = t.vertex(path.vertices[3]);
  Plane face_c = t.face_plane(face_opposite(t, path.vertices[2]));
  Plane face_d = t.face_plane(face_opposite(t, path.vertices[3]));
  Vec3 e = perpendicular_cut(a, b, face_c, c, d);
  Vec3 f = perpendicular_cut(b, c, face_d, a, e);
  LoadingRegion region;
  if (!want_opposite_first) {
    Plane face_a = t.face_plane(face_opposite(t, path.vertices[0]));
    Vec3 g = perpendicular_cut(c, e, face_a, b, f);
    region.corners = {c, e, f, g};
    region.target_face = face_opposite(t, path.vertices[1]);
  } else {
    Plane face_b = t.face_plane(face_opposite(t, path.vertices[1]));
    Vec3 h = perpendicular_cut(c, e, face_b, b, f);
    region.corners = {b, c, e, h};
    region.target_face = face_opposite(t, path.vertices[0]);
  }
  if (orientation(region.corners[0], region.corners[1], region.corners[2], region.corners[3]) == 0)
    fail(Errc::degenerate_cut, "loading region has zero volume");
  return region;
}

}  // namespace detail

inline LoadingRegion loading_region(const Polyhedron& t, int target_face) {
  detail::require_tetrahedron(t);
  if (target_face < 0 || target_face >= t.num_faces())
    fail(Errc::schema_error, "no face " + std::to_string(target_face));
  std::vector<ObtusePath> paths = find_obtuse_paths(t);
  if (paths.empty()) fail(Errc::no_obtuse_path, "tetrahedron has no obtuse path");
  const ObtusePath& p = paths.front();
  ObtusePath rev{{p.vertices[3], p.vertices[2], p.vertices[1], p.vertices[0]}};
  if (target_face == detail::face_opposite(t, p.vertices[1]))
    return detail::loading_chain(t, p, false);
  if (target_face == detail::face_opposite(t, p.vertices[0]))
    return detail::loading_chain(t, p, true);
  if (target_face == detail::face_opposite(t, p.vertices[2]))
    return detail::loading_chain(t, rev, false);
  return detail::loading_chain(t, rev, true);
}

inline WeightedPolyhedron monostable_weighting(const Polyhedron& t, int target_face) {
  LoadingRegion region = loading_region(t, target_face);
  WeightedPolyhedron wp{t, region.centroid()};
  EquilibriumReport report = classify(wp);
  if (!report.reliable() || report.stable_faces.size() != 1 ||
      report.stable_faces.front() != target_face)
    fail(Errc::verification_failed,
         "loading region centroid does not load face " + std::to_string(target_face));
  return wp;
}

inline WeightedPolyhedron monounstable_weighting(const Polyhedron& t, const ObtuseCycle& cycle) {
  detail::require_tetrahedron(t);
  if (!(face_angle_sign(t, cycle.vertices[1], cycle.vertices[0], cycle.vertices[2]) ==
            AngleClass::Obtuse &&
        face_angle_sign(t, cycle.vertices[2], cycle.vertices[1], cycle.vertices[3]) ==
            AngleClass::Obtuse &&
        face_angle_sign(t, cycle.vertices[3], cycle.vertices[2], cycle.vertices[0]) ==
            AngleClass::Obtuse))
    fail(Errc::no_obtuse_cycle, "cycle is not obtuse for this tetrahedron");
  const Vec3& b = t.vertex(cycle.vertices[1]);
  const Vec3& c = t.vertex(cycle.vertices[2]);
  Vec3 i = centroid(t);
  for (int k = 1; k <= 64; ++k) {
    Vec3 p = c + (b - c) * Rat::pow2(-k);
    for (int j = 1; j <= 64; ++j) {
      Vec3 o = p + (i - p) * Rat::pow2(-j);
      WeightedPolyhedron wp{t, o};
      EquilibriumReport report = classify(wp);
      if (report.reliable() && report.unstable_vertices.size() == 1 &&
          report.unstable_vertices.front() == cycle.vertices[0])
        return wp;
    }
  }
  fail(Errc::search_exhausted, "no mono-unstable center found within the dyadic budget");
}

enum class Exclusivity { PathOnly, CycleOnly, Neither };

inline const char* to_string(Exclusivity e) {
  switch (e) {
    case Exclusivity::PathOnly: return "PathOnly";
    case Exclusivity::CycleOnly: return "CycleOnly";
    default: return "Neither";
  }
}

inline Exclusivity check_exclusivity(const Polyhedron& t) {
  bool has_path = !find_obtuse_paths(t).empty();
  bool has_cycle = !find_obtuse_cycles(t).empty();
  if (has_path && has_cycle)
    fail(Errc::theorem_violation, "tetrahedron admits both an obtuse path and an obtuse cycle");
  if (has_path) return Exclusivity::PathOnly;
  if (has_cycle) return Exclusivity::CycleOnly;
  return Exclusivity::Neither;
}

}  // namespace polystat
