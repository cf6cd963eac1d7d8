#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace polystat {

// Undirected edge. u < v always; left_face walks u -> v in its cycle and
// right_face walks v -> u. Both are -1 until the combinatorics check passes.
struct Edge {
  int u = -1, v = -1;
  int left_face = -1, right_face = -1;

  int other_face(int f) const { return f == left_face ? right_face : left_face; }
  int other_vertex(int w) const { return w == u ? v : u; }
};

struct FaceVector {
  long f = 0, e = 0, v = 0;

  friend bool operator==(const FaceVector& a, const FaceVector& b) {
    return a.f == b.f && a.e == b.e && a.v == b.v;
  }
};

inline bool is_legal_face_vector(long f, long e, long v) {
  return f >= 4 && v >= 4 && e == f + v - 2 && 2 * f >= v + 4 && 2 * v >= f + 4;
}

inline bool is_legal_face_vector(const FaceVector& fv) {
  return is_legal_face_vector(fv.f, fv.e, fv.v);
}

// Convex polyhedron held as vertex coordinates plus cyclic vertex-index
// cycles per face. Faces are expected to be oriented outward; validate()
// checks that along with everything else. The edge list is derived eagerly
// and is empty when the face cycles do not form a closed 2-manifold.
class Polyhedron {
 public:
  Polyhedron() = default;
  Polyhedron(std::vector<Vec3> vertices, std::vector<std::vector<int>> faces)
      : vertices_(std::move(vertices)), faces_(std::move(faces)) {
    build_edges();
  }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vec3& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& face(int i) const { return faces_[static_cast<std::size_t>(i)]; }
  const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // True when every undirected edge is shared by exactly two faces with
  // opposite directions and all face cycles are well formed.
  bool combinatorics_ok() const { return combinatorics_ok_; }

  int edge_between(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = edge_index_.find({a, b});
    return it == edge_index_.end() ? -1 : it->second;
  }

  bool face_contains(int f, int vid) const {
    const auto& c = face(f);
    return std::find(c.begin(), c.end(), vid) != c.end();
  }

  std::vector<int> faces_at_vertex(int vid) const {
    std::vector<int> out;
    for (int f = 0; f < num_faces(); ++f)
      if (face_contains(f, vid)) out.push_back(f);
    return out;
  }

  std::vector<int> edges_at_vertex(int vid) const {
    std::vector<int> out;
    for (int e = 0; e < num_edges(); ++e)
      if (edges_[static_cast<std::size_t>(e)].u == vid ||
          edges_[static_cast<std::size_t>(e)].v == vid)
        out.push_back(e);
    return out;
  }

  // Supporting plane of face f with the Newell normal, which points outward
  // when the cycle is oriented outward. Exact for planar faces.
  Plane face_plane(int f) const {
    const auto& c = face(f);
    Vec3 n{};
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vec3& a = vertex(c[i]);
      const Vec3& b = vertex(c[(i + 1) % c.size()]);
      n += cross(a, b);
    }
    if (n.is_zero()) fail(Errc::degenerate_input, "face with zero area vector");
    return Plane{n, dot(n, vertex(c[0]))};
  }

  bool is_tetrahedron() const {
    if (num_vertices() != 4 || num_faces() != 4) return false;
    for (const auto& c : faces_)
      if (c.size() != 3) return false;
    return true;
  }

 private:
  void build_edges() {
    combinatorics_ok_ = false;
    edges_.clear();
    edge_index_.clear();
    const int nv = num_vertices();
    for (const auto& c : faces_) {
      if (c.size() < 3) return;
      for (int vid : c)
        if (vid < 0 || vid >= nv) return;
    }
    for (int f = 0; f < num_faces(); ++f) {
      const auto& c = face(f);
      for (std::size_t i = 0; i < c.size(); ++i) {
        int a = c[i], b = c[(i + 1) % c.size()];
        if (a == b) return;
        bool forward = a < b;
        std::pair<int, int> key = forward ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = edge_index_.find(key);
        if (it == edge_index_.end()) {
          Edge e;
          e.u = key.first;
          e.v = key.second;
          (forward ? e.left_face : e.right_face) = f;
          edge_index_[key] = static_cast<int>(edges_.size());
          edges_.push_back(e);
        } else {
          Edge& e = edges_[static_cast<std::size_t>(it->second)];
          int& slot = forward ? e.left_face : e.right_face;
          if (slot != -1) return;  // same direction seen twice
          slot = f;
        }
      }
    }
    for (const Edge& e : edges_)
      if (e.left_face == -1 || e.right_face == -1) return;
    combinatorics_ok_ = true;
  }

  std::vector<Vec3> vertices_;
  std::vector<std::vector<int>> faces_;
  std::vector<Edge> edges_;
  std::map<std::pair<int, int>, int> edge_index_;
  bool combinatorics_ok_ = false;
};

struct WeightedPolyhedron {
  Polyhedron shape;
  Vec3 center;
};

inline FaceVector face_vector(const Polyhedron& p) {
  return FaceVector{p.num_faces(), p.num_edges(), p.num_vertices()};
}

inline Vec3 centroid(const Polyhedron& p) {
  Vec3 s{};
  for (const Vec3& v : p.vertices()) s += v;
  return Rat(Int(1), Int(p.num_vertices())) * s;
}

// Strict interiority: x strictly below every face plane.
inline bool is_interior(const Polyhedron& p, const Vec3& x) {
  for (int f = 0; f < p.num_faces(); ++f)
    if (p.face_plane(f).eval(x).sign() >= 0) return false;
  return true;
}

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;

  void note(std::string msg) {
    ok = false;
    problems.push_back(std::move(msg));
  }
};

// Full structural check: closed 2-manifold combinatorics, Euler count,
// planar strictly convex faces, outward normals, global strict convexity,
// distinct vertices, degree >= 3. Does not mutate; reorientation is a
// separate concern (see oriented_outward).
inline ValidationReport validate(const Polyhedron& p) {
  ValidationReport r;
  const int nv = p.num_vertices();
  const int nf = p.num_faces();
  if (nv < 4) r.note("fewer than 4 vertices");
  if (nf < 4) r.note("fewer than 4 faces");
  for (int f = 0; f < nf; ++f) {
    const auto& c = p.face(f);
    if (c.size() < 3) r.note("face " + std::to_string(f) + " has fewer than 3 vertices");
    for (int vid : c)
      if (vid < 0 || vid >= nv)
        r.note("face " + std::to_string(f) + " references invalid vertex " + std::to_string(vid));
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      r.note("face " + std::to_string(f) + " repeats a vertex");
  }
  if (!r.ok) return r;

  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (p.vertex(i) == p.vertex(j))
        r.note("vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  if (!p.combinatorics_ok()) {
    r.note("face cycles do not form a closed 2-manifold");
    return r;
  }

  std::vector<int> degree(static_cast<std::size_t>(nv), 0);
  for (const Edge& e : p.edges()) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  for (int i = 0; i < nv; ++i)
    if (degree[static_cast<std::size_t>(i)] < 3)
      r.note("vertex " + std::to_string(i) + " has degree below 3");
  if (nf - p.num_edges() + nv != 2) r.note("Euler count f - e + v != 2");
  if (!r.ok) return r;

  for (int f = 0; f < nf; ++f) {
    const auto& c = p.face(f);
    Plane pl;
    try {
      pl = p.face_plane(f);
    } catch (const Error&) {
      r.note("face " + std::to_string(f) + " has zero area vector");
      continue;
    }
    bool planar = true;
    for (int vid : c)
      if (!pl.eval(p.vertex(vid)).is_zero()) planar = false;
    if (!planar) {
      r.note("face " + std::to_string(f) + " is not planar");
      continue;
    }
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Vec3& a = p.vertex(c[i]);
      const Vec3& b = p.vertex(c[(i + 1) % k]);
      const Vec3& d = p.vertex(c[(i + 2) % k]);
      int turn = dot(cross(b - a, d - b), pl.normal).sign();
      if (turn <= 0) {
        r.note("face " + std::to_string(f) +
               (turn == 0 ? " has collinear consecutive vertices" : " is not convex"));
        break;
      }
    }
    for (int vid = 0; vid < nv; ++vid) {
      int s = pl.eval(p.vertex(vid)).sign();
      bool on_face = p.face_contains(f, vid);
      if (on_face && s != 0)
        r.note("vertex " + std::to_string(vid) + " is off the plane of its face " + std::to_string(f));
      if (!on_face && s >= 0)
        r.note("vertex " + std::to_string(vid) + " is not strictly below face " + std::to_string(f) +
               (s == 0 ? " (on its plane)" : " (above it; normal may point inward)"));
    }
  }
  return r;
}

// Copy of p with every face cycle flipped, if needed, so its Newell normal
// points away from the vertex centroid. Second member reports whether any
// face was flipped. Faces whose plane passes through the centroid are left
// alone; validate() will reject such input later.
inline std::pair<Polyhedron, bool> oriented_outward(const Polyhedron& p) {
  Vec3 c = centroid(p);
  bool changed = false;
  std::vector<std::vector<int>> faces = p.faces();
  for (int f = 0; f < p.num_faces(); ++f) {
    Plane pl;
    try {
      pl = p.face_plane(f);
    } catch (const Error&) {
      continue;
    }
    if (pl.eval(c).sign() > 0) {
      std::reverse(faces[static_cast<std::size_t>(f)].begin(),
                   faces[static_cast<std::size_t>(f)].end());
      changed = true;
    }
  }
  if (!changed) return {p, false};
  return {Polyhedron(p.vertices(), std::move(faces)), true};
}

// Face i is opposite vertex i; each face is oriented outward.
inline Polyhedron tetrahedron(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  if (orientation(a, b, c, d) == 0)
    fail(Errc::degenerate_tetrahedron, "tetrahedron vertices are coplanar");
  const Vec3 pts[4] = {a, b, c, d};
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> others;
    for (int j = 0; j < 4; ++j)
      if (j != i) others.push_back(j);
    Vec3 n = cross(pts[others[1]] - pts[others[0]], pts[others[2]] - pts[others[0]]);
    if (dot(n, pts[i] - pts[others[0]]).sign() > 0) std::swap(others[1], others[2]);
    faces.push_back(std::move(others));
  }
  return Polyhedron({a, b, c, d}, std::move(faces));
}

}  // namespace polystat
