#pragma once

#include <algorithm>
#include <array>
#include <utility>

#include "polyhedron.hpp"

namespace polystat {

// Face angle at `apex` spanned by neighbors u and w. The three must occur
// consecutively (u, apex, w or w, apex, u) on some face cycle.
inline AngleClass face_angle_sign(const Polyhedron& p, int apex, int u, int w) {
  for (int f = 0; f < p.num_faces(); ++f) {
    const auto& c = p.face(f);
    auto it = std::find(c.begin(), c.end(), apex);
    if (it == c.end()) continue;
    std::size_t i = static_cast<std::size_t>(it - c.begin());
    int prev = c[(i + c.size() - 1) % c.size()];
    int next = c[(i + 1) % c.size()];
    if ((prev == u && next == w) || (prev == w && next == u))
      return angle_sign(p.vertex(apex), p.vertex(u), p.vertex(w));
  }
  fail(Errc::not_incident, "no face has the angle " + std::to_string(u) + "-" +
                               std::to_string(apex) + "-" + std::to_string(w));
}

// Interior dihedral along an edge, classified by the dot product of the two
// outward face normals: positive means the faces fold away gently (obtuse
// interior dihedral), negative means a sharp crease (acute).
inline AngleClass dihedral_sign(const Polyhedron& p, const Edge& e) {
  Plane left = p.face_plane(e.left_face);
  Plane right = p.face_plane(e.right_face);
  int s = dot(left.normal, right.normal).sign();
  return s > 0 ? AngleClass::Obtuse : (s == 0 ? AngleClass::Right : AngleClass::Acute);
}

inline AngleClass dihedral_sign(const Polyhedron& p, int edge_id) {
  return dihedral_sign(p, p.edge(edge_id));
}

// Ordered pair [m,n]: m obtuse face angles and n obtuse dihedrals at a
// tetrahedron vertex. Right angles count toward neither but are reported.
struct VertexSignature {
  int m = 0, n = 0;
  int right_face_angles = 0, right_dihedrals = 0;

  friend bool operator==(const VertexSignature& a, const VertexSignature& b) {
    return a.m == b.m && a.n == b.n;
  }
  friend bool operator<(const VertexSignature& a, const VertexSignature& b) {
    return a.m != b.m ? a.m < b.m : a.n < b.n;
  }
};

inline VertexSignature vertex_signature(const Polyhedron& p, int v) {
  if (!p.is_tetrahedron())
    fail(Errc::not_a_tetrahedron, "vertex signatures are defined for tetrahedra only");
  VertexSignature sig;
  std::array<int, 3> others{};
  int k = 0;
  for (int x = 0; x < 4; ++x)
    if (x != v) others[static_cast<std::size_t>(k++)] = x;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      AngleClass a = angle_sign(p.vertex(v), p.vertex(others[static_cast<std::size_t>(i)]),
                                p.vertex(others[static_cast<std::size_t>(j)]));
      if (a == AngleClass::Obtuse) ++sig.m;
      if (a == AngleClass::Right) ++sig.right_face_angles;
    }
  for (int x : others) {
    int ei = p.edge_between(v, x);
    AngleClass a = dihedral_sign(p, ei);
    if (a == AngleClass::Obtuse) ++sig.n;
    if (a == AngleClass::Right) ++sig.right_dihedrals;
  }
  return sig;
}

inline bool admissible_signature(const VertexSignature& s) {
  static constexpr std::pair<int, int> kAdmissible[] = {
      {0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 3}};
  for (auto [m, n] : kAdmissible)
    if (s.m == m && s.n == n) return true;
  return false;
}

// Classes of the spherical triangle spanned by three directions from a
// common apex. edge_classes[i] and angle_classes[i] are opposite each
// other: edge i is the arc between the other two directions.
struct SphericalTriangleClass {
  std::array<ArcClass, 3> edge_classes;
  std::array<AngleClass, 3> angle_classes;

  int long_edges() const {
    int k = 0;
    for (ArcClass c : edge_classes)
      if (c == ArcClass::Long) ++k;
    return k;
  }
  int obtuse_angles() const {
    int k = 0;
    for (AngleClass c : angle_classes)
      if (c == AngleClass::Obtuse) ++k;
    return k;
  }
  bool has_quarter_edge() const {
    return std::find(edge_classes.begin(), edge_classes.end(), ArcClass::Quarter) !=
           edge_classes.end();
  }
  bool has_right_angle() const {
    return std::find(angle_classes.begin(), angle_classes.end(), AngleClass::Right) !=
           angle_classes.end();
  }
};

// Arc between two directions is Short iff their dot is positive; the corner
// angle at direction a is classified by the Lagrange identity
// (a.a)(b.c) - (a.b)(a.c) = cross(a,b).cross(a,c), whose sign matches the
// cosine of the spherical angle. No normalization, no trigonometry.
inline SphericalTriangleClass classify_spherical_triangle(const Vec3& a, const Vec3& b,
                                                          const Vec3& c) {
  const Vec3* d[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    if (d[i]->is_zero()) fail(Errc::degenerate_directions, "zero direction vector");
    if (cross(*d[i], *d[(i + 1) % 3]).is_zero())
      fail(Errc::degenerate_directions, "two directions are parallel");
  }
  SphericalTriangleClass out;
  for (int i = 0; i < 3; ++i) {
    const Vec3& self = *d[i];
    const Vec3& p = *d[(i + 1) % 3];
    const Vec3& q = *d[(i + 2) % 3];
    out.edge_classes[static_cast<std::size_t>(i)] = arc_class_from_sign(dot(p, q).sign());
    out.angle_classes[static_cast<std::size_t>(i)] =
        angle_class_from_sign(dot(cross(self, p), cross(self, q)).sign());
  }
  return out;
}

}  // namespace polystat
