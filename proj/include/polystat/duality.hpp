#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "polystat/equilibria.hpp"
#include "polystat/errors.hpp"
#include "polystat/geometry.hpp"
#include "polystat/polyhedron.hpp"

namespace polystat {

// Index maps between faces of P and vertices of its polar dual (and back).
// Both maps are identities by construction, kept explicit so callers never
// have to rely on that.
struct DualCorrespondence {
  std::vector<int> face_to_vertex;
  std::vector<int> vertex_to_face;
};

namespace detail {

// Faces around vertex v in rotational order: from face f, step across the
// edge (v, successor of v in f) to the neighbouring face.
inline std::vector<int> faces_around_vertex(const Polyhedron& p, int v) {
  int start = -1;
  for (int f = 0; f < p.num_faces() && start < 0; ++f)
    if (p.face_contains(f, v)) start = f;
  if (start < 0) fail(Errc::degenerate_input, "vertex lies on no face");
  std::vector<int> ring;
  int f = start;
  do {
    ring.push_back(f);
    const std::vector<int>& cycle = p.face(f);
    int successor = -1;
    for (std::size_t i = 0; i < cycle.size(); ++i)
      if (cycle[i] == v) successor = cycle[(i + 1) % cycle.size()];
    int e = p.edge_between(v, successor);
    if (e < 0) fail(Errc::degenerate_input, "open face fan at a vertex");
    f = p.edge(e).other_face(f);
    if (ring.size() > static_cast<std::size_t>(p.num_faces()))
      fail(Errc::degenerate_input, "non-closing face fan at a vertex");
  } while (f != start);
  return ring;
}

}  // namespace detail

// Polar dual about the center: O moves to the origin, each face with
// supporting plane n.x = c (c > 0) becomes the dual vertex n/c, and each
// vertex becomes the dual face of its surrounding faces' dual vertices.
// The result is reported in O-centered coordinates with center (0,0,0).
inline std::pair<WeightedPolyhedron, DualCorrespondence> polar_dual(const WeightedPolyhedron& wp) {
  const Polyhedron& p = wp.shape;
  std::vector<Vec3> shifted;
  shifted.reserve(static_cast<std::size_t>(p.num_vertices()));
  for (int v = 0; v < p.num_vertices(); ++v) shifted.push_back(p.vertex(v) - wp.center);
  Polyhedron centered(shifted, p.faces());

  std::vector<Vec3> dual_vertices;
  dual_vertices.reserve(static_cast<std::size_t>(p.num_faces()));
  for (int f = 0; f < p.num_faces(); ++f) {
    Plane pl = centered.face_plane(f);
    if (!(pl.offset > Rat(0)))
      fail(Errc::center_not_interior, "center is not strictly inside the shape");
    Rat inv = Rat(1) / pl.offset;
    dual_vertices.push_back(pl.normal * inv);
  }

  std::vector<std::vector<int>> dual_faces;
  dual_faces.reserve(static_cast<std::size_t>(p.num_vertices()));
  for (int v = 0; v < p.num_vertices(); ++v) {
    std::vector<int> ring = detail::faces_around_vertex(p, v);
    // outward orientation: the dual face's supporting plane is x.(v-O) = 1
    Vec3 newell{Rat(0), Rat(0), Rat(0)};
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Vec3& a = dual_vertices[static_cast<std::size_t>(ring[i])];
      const Vec3& b = dual_vertices[static_cast<std::size_t>(ring[(i + 1) % ring.size()])];
      newell = newell + cross(a, b);
    }
    Vec3 outward = centered.vertex(v);
    Rat side = dot(newell, outward);
    if (side.is_zero()) fail(Errc::degenerate_input, "flat dual face");
    if (side < Rat(0)) std::reverse(ring.begin(), ring.end());
    // canonical rotation: start at the smallest dual vertex id
    std::size_t lo = 0;
    for (std::size_t i = 1; i < ring.size(); ++i)
      if (ring[i] < ring[lo]) lo = i;
    std::rotate(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(lo), ring.end());
    dual_faces.push_back(std::move(ring));
  }

  Polyhedron dual(dual_vertices, dual_faces);
  ValidationReport check = validate(dual);
  if (!check.ok) {
    std::string msg = "dual failed validation";
    for (const std::string& problem : check.problems) msg += "; " + problem;
    fail(Errc::validation_failed, msg);
  }
  DualCorrespondence corr;
  corr.face_to_vertex.resize(static_cast<std::size_t>(p.num_faces()));
  corr.vertex_to_face.resize(static_cast<std::size_t>(p.num_vertices()));
  for (int f = 0; f < p.num_faces(); ++f) corr.face_to_vertex[static_cast<std::size_t>(f)] = f;
  for (int v = 0; v < p.num_vertices(); ++v) corr.vertex_to_face[static_cast<std::size_t>(v)] = v;
  return {WeightedPolyhedron{std::move(dual), Vec3{Rat(0), Rat(0), Rat(0)}}, std::move(corr)};
}

// Equilibrium correspondence: stable faces of P pair with unstable vertices
// of the dual, and unstable vertices of P with stable faces of the dual.
inline bool check_prop_polar(const WeightedPolyhedron& wp) {
  EquilibriumReport primal = classify(wp);
  if (!primal.reliable())
    fail(Errc::degenerate_classification, "primal classification is degenerate");
  auto [dual, corr] = polar_dual(wp);
  EquilibriumReport mirrored = classify(dual);
  if (!mirrored.reliable())
    fail(Errc::degenerate_classification, "dual classification is degenerate");

  std::vector<int> want_vertices;
  want_vertices.reserve(primal.stable_faces.size());
  for (int f : primal.stable_faces)
    want_vertices.push_back(corr.face_to_vertex[static_cast<std::size_t>(f)]);
  std::sort(want_vertices.begin(), want_vertices.end());
  std::vector<int> got_vertices = mirrored.unstable_vertices;
  std::sort(got_vertices.begin(), got_vertices.end());

  std::vector<int> want_faces;
  want_faces.reserve(primal.unstable_vertices.size());
  for (int v : primal.unstable_vertices)
    want_faces.push_back(corr.vertex_to_face[static_cast<std::size_t>(v)]);
  std::sort(want_faces.begin(), want_faces.end());
  std::vector<int> got_faces = mirrored.stable_faces;
  std::sort(got_faces.begin(), got_faces.end());

  return want_vertices == got_vertices && want_faces == got_faces;
}

}  // namespace polystat
