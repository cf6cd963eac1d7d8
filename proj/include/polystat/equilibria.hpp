#pragma once

#include <string>
#include <vector>

#include "polyhedron.hpp"

namespace polystat {

enum class ElementKind { Face, Edge, Vertex };

inline const char* to_string(ElementKind k) {
  switch (k) {
    case ElementKind::Face: return "face";
    case ElementKind::Edge: return "edge";
    case ElementKind::Vertex: return "vertex";
  }
  return "?";
}

// A sign test that came back exactly zero. The element is excluded from the
// strict equilibrium sets and the report is marked unreliable.
struct Degeneracy {
  ElementKind kind;
  int id;
  std::string reason;
};

struct EquilibriumReport {
  std::vector<int> stable_faces;      // ids, ascending
  std::vector<int> saddle_edges;      // ids, ascending
  std::vector<int> unstable_vertices; // ids, ascending
  std::vector<Degeneracy> degenerate;

  int S() const { return static_cast<int>(stable_faces.size()); }
  int H() const { return static_cast<int>(saddle_edges.size()); }
  int U() const { return static_cast<int>(unstable_vertices.size()); }
  bool reliable() const { return degenerate.empty(); }
};

namespace detail {

inline void record(std::vector<Degeneracy>* sink, ElementKind kind, int id, std::string reason) {
  if (sink) sink->push_back(Degeneracy{kind, id, std::move(reason)});
}

}  // namespace detail

// The body rests stably on face F iff the perpendicular foot of the center
// on F's supporting plane falls strictly inside the face polygon. The face
// plane supports the whole convex body, so the in-plane test is the entire
// condition. A foot exactly on the polygon boundary is a degeneracy.
inline std::vector<int> stable_faces(const WeightedPolyhedron& wp,
                                     std::vector<Degeneracy>* sink = nullptr) {
  std::vector<int> out;
  const Polyhedron& p = wp.shape;
  for (int f = 0; f < p.num_faces(); ++f) {
    Plane pl = p.face_plane(f);
    Vec3 q = project_point_to_plane(wp.center, pl);
    const auto& c = p.face(f);
    bool outside = false, boundary = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vec3& a = p.vertex(c[i]);
      const Vec3& b = p.vertex(c[(i + 1) % c.size()]);
      int s = dot(cross(b - a, q - a), pl.normal).sign();
      if (s < 0) outside = true;
      if (s == 0) boundary = true;
    }
    if (outside) continue;
    if (boundary) {
      detail::record(sink, ElementKind::Face, f, "foot of center lies on the face boundary");
      continue;
    }
    out.push_back(f);
  }
  return out;
}

// The body balances on vertex A iff the plane through A normal to the
// center-to-A segment supports the body, i.e. every other vertex X makes a
// strictly acute angle at A between X and the center.
inline std::vector<int> unstable_vertices(const WeightedPolyhedron& wp,
                                          std::vector<Degeneracy>* sink = nullptr) {
  std::vector<int> out;
  const Polyhedron& p = wp.shape;
  for (int a = 0; a < p.num_vertices(); ++a) {
    Vec3 toward_center = wp.center - p.vertex(a);
    bool all_acute = true, any_right = false;
    for (int x = 0; x < p.num_vertices(); ++x) {
      if (x == a) continue;
      int s = dot(p.vertex(x) - p.vertex(a), toward_center).sign();
      if (s <= 0) all_acute = false;
      if (s == 0) any_right = true;
    }
    if (any_right)
      detail::record(sink, ElementKind::Vertex, a, "right angle in the vertex support test");
    if (all_acute) out.push_back(a);
  }
  return out;
}

// The body balances on edge [A,B] iff the foot of the center on the edge's
// line falls strictly between A and B and the plane through the foot normal
// to the center-to-foot segment supports the body.
inline std::vector<int> saddle_edges(const WeightedPolyhedron& wp,
                                     std::vector<Degeneracy>* sink = nullptr) {
  std::vector<int> out;
  const Polyhedron& p = wp.shape;
  static const Rat kOne(1);
  for (int ei = 0; ei < p.num_edges(); ++ei) {
    const Edge& e = p.edge(ei);
    LineFoot lf = project_point_to_line(wp.center, p.vertex(e.u), p.vertex(e.v));
    if (lf.t.is_zero() || lf.t == kOne) {
      detail::record(sink, ElementKind::Edge, ei, "foot of center at an edge endpoint");
      continue;
    }
    if (lf.t.sign() < 0 || lf.t > kOne) continue;
    Vec3 toward_center = wp.center - lf.foot;
    bool all_positive = true, any_zero = false;
    for (int x = 0; x < p.num_vertices(); ++x) {
      if (x == e.u || x == e.v) continue;
      int s = dot(p.vertex(x) - lf.foot, toward_center).sign();
      if (s <= 0) all_positive = false;
      if (s == 0) any_zero = true;
    }
    if (any_zero)
      detail::record(sink, ElementKind::Edge, ei, "zero sign in the edge support test");
    if (all_positive) out.push_back(ei);
  }
  return out;
}

inline EquilibriumReport classify(const WeightedPolyhedron& wp) {
  EquilibriumReport r;
  r.stable_faces = stable_faces(wp, &r.degenerate);
  r.saddle_edges = saddle_edges(wp, &r.degenerate);
  r.unstable_vertices = unstable_vertices(wp, &r.degenerate);
  return r;
}

inline bool maxwell_check(const EquilibriumReport& r) {
  return r.S() - r.H() + r.U() == 2;
}

}  // namespace polystat
